use super::fix_curve::{fix_curve, FixCurve};
use super::numeric::{finite, NumericMap, NumericPair};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::poly::PolyPair;

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricOrbit {
    /// `points[0]` lies on the fixed curve of the reversor.
    pub points: Vec<(f64, f64)>,
    pub period: usize,
    /// Smallest `d` dividing `period` with `L^d(points[0]) ≈ points[0]`.
    pub minimal_period: usize,
    /// Largest of the landing defect and `|L^period(z0) - z0|`.
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub interval: (f64, f64),
    pub samples: usize,
    /// Bisection stops once the bracket is narrower than this.
    pub root_tol: f64,
    /// Orbits with a larger residual are dropped.
    pub accept_tol: f64,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            interval: (-2.0, 2.0),
            samples: 2000,
            root_tol: 1e-12,
            accept_tol: 1e-10,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSearch {
    pub curve: FixCurve,
    pub orbits: Vec<SymmetricOrbit>,
    pub diagnostics: Vec<String>,
}

/// Shooting setup for period `k`: start on Fix(R), take `m = ⌈k/2⌉` steps and
/// require the landing point `w` to satisfy `R(w) = L^back(z)`, i.e. `w` in
/// Fix(R) for even `k` and in Fix(L∘R) for odd `k`.
struct Shot<'a> {
    l: &'a NumericMap,
    r: &'a NumericPair,
    m: usize,
    back: usize,
}

impl Shot<'_> {
    fn defect(&self, z: (f64, f64)) -> Option<(f64, f64)> {
        let zb = self.l.power(z, self.back)?;
        let w = self.l.power(zb, self.m - self.back)?;
        let rw = self.r.apply(w);
        let d = (rw.0 - zb.0, rw.1 - zb.1);
        finite(d).then_some(d)
    }
}

fn component(d: (f64, f64), c: usize) -> f64 {
    if c == 0 {
        d.0
    } else {
        d.1
    }
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// Symmetric periodic orbits of period `k` meeting the fixed curve of the
/// involutory reversing symmetry `r` inside `opts.interval`.
pub fn find_symmetric_orbits(l: &NumericMap, r: &PolyPair, k: usize, opts: &SearchOptions) -> Result<OrbitSearch> {
    if k == 0 {
        return Err(Error::Internal("period must be positive".into()));
    }
    if !(opts.root_tol > 0.0 && opts.accept_tol > 0.0) || opts.samples < 1 {
        return Err(Error::Internal("tolerances must be positive and samples nonzero".into()));
    }
    let curve = fix_curve(r)?;
    let shape = curve.clone();
    let at = shape.sampler();
    let rn = NumericPair::new(r);
    let m = k.div_ceil(2);
    let shot = Shot {
        l,
        r: &rn,
        m,
        back: if k.is_multiple_of(2) { m } else { m - 1 },
    };

    let (a, b) = opts.interval;
    let n = opts.samples;
    let params: Vec<f64> = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
    let values = opts.execution.map(&params, |&s| shot.defect(at(s)));

    let mut diagnostics = Vec::new();
    let diverged = values.iter().filter(|v| v.is_none()).count();
    if diverged > 0 {
        diagnostics.push(format!("{diverged} of {} samples escaped to infinity", n + 1));
    }

    let mut brackets = Vec::new();
    for c in 0..2 {
        // Some reversors fix one coordinate outright (R = (x, ...) keeps
        // x), leaving that component zero everywhere and no condition.
        if values.iter().flatten().all(|v| component(*v, c) == 0.0) {
            continue;
        }
        for i in 0..n {
            if let (Some(u), Some(v)) = (values[i], values[i + 1]) {
                let (fu, fv) = (component(u, c), component(v, c));
                if fu == 0.0 {
                    brackets.push((params[i], params[i], c));
                } else if fu * fv < 0.0 {
                    brackets.push((params[i], params[i + 1], c));
                }
            }
        }
        if let Some(v) = values[n] {
            if component(v, c) == 0.0 {
                brackets.push((params[n], params[n], c));
            }
        }
    }

    let roots = opts.execution.map(&brackets, |&(lo, hi, c)| bisect(&shot, &at, lo, hi, c, opts.root_tol));

    let mut orbits: Vec<SymmetricOrbit> = Vec::new();
    for (s, c) in roots.into_iter().zip(brackets.iter().map(|b| b.2)).filter_map(|(s, c)| s.map(|s| (s, c))) {
        let z0 = at(s);
        let Some(d) = shot.defect(z0) else {
            diagnostics.push(format!("root at {}={s}: orbit diverged", curve.parameter()));
            continue;
        };
        let mut points = vec![z0];
        let mut z = z0;
        let mut ok = true;
        for _ in 1..=k {
            z = l.forward(z);
            if !finite(z) {
                ok = false;
                break;
            }
            points.push(z);
        }
        if !ok {
            diagnostics.push(format!("root at {}={s}: orbit diverged", curve.parameter()));
            continue;
        }
        // A true orbit zeroes both defect components at once. Near a
        // degenerate fixed point one component can cross zero while the
        // other stays merely tiny; those roots are rejected.
        let step = (b - a) / n as f64;
        if !other_component_vanishes(&shot, &at, s, step, c) {
            continue;
        }
        let closing = points.pop().expect("k >= 1 points pushed");
        let residual = d.0.hypot(d.1).max(dist(closing, z0));
        if residual >= opts.accept_tol {
            diagnostics.push(format!(
                "root at {}={s}: residual {residual:.1e} above tolerance",
                curve.parameter()
            ));
            continue;
        }
        let scale = 1.0 + z0.0.abs().max(z0.1.abs());
        let seen = orbits.iter().any(|o| o.points.iter().any(|&p| dist(p, z0) < 1e-8 * scale));
        if seen {
            continue;
        }
        let minimal_period = (1..=k)
            .find(|d| k.is_multiple_of(*d) && dist(points[*d % k], z0) < opts.accept_tol.max(1e-8 * scale))
            .unwrap_or(k);
        orbits.push(SymmetricOrbit {
            points,
            period: k,
            minimal_period,
            residual,
        });
    }
    orbits.sort_by(|p, q| p.points[0].partial_cmp(&q.points[0]).expect("finite points"));
    Ok(OrbitSearch {
        curve,
        orbits,
        diagnostics,
    })
}

/// The component other than `c` either changes sign across `s` or is far
/// smaller at `s` than one grid step away.
fn other_component_vanishes(shot: &Shot<'_>, at: &impl Fn(f64) -> (f64, f64), s: f64, step: f64, c: usize) -> bool {
    let eval = |t: f64| shot.defect(at(t)).map(|d| component(d, 1 - c));
    let (Some(lo), Some(mid), Some(hi)) = (eval(s - step), eval(s), eval(s + step)) else {
        return false;
    };
    mid == 0.0 || lo * hi < 0.0 || mid.abs() <= 1e-3 * lo.abs().max(hi.abs())
}

fn bisect(
    shot: &Shot<'_>,
    at: &impl Fn(f64) -> (f64, f64),
    mut lo: f64,
    mut hi: f64,
    c: usize,
    tol: f64,
) -> Option<f64> {
    let eval = |s: f64| shot.defect(at(s)).map(|d| component(d, c));
    let mut flo = eval(lo)?;
    if flo == 0.0 {
        return Some(lo);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(mid)?;
        if fm == 0.0 {
            return Some(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}
