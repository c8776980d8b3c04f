//! One-dimensional global maximization: an equally spaced scan followed by
//! golden-section refinement around every discrete local maximum.
//!
//! Nothing here assumes unimodality; the scan density is chosen by the
//! caller to resolve every hump of its objective.

/// Result of a scan-and-refine maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub argmax: f64,
    pub value: f64,
    pub evaluations: usize,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximize `f` on [lo, hi]: scan `points` equally spaced abscissae, then
/// refine each discrete local maximum (endpoints included) by golden
/// section until the enclosing interval is shorter than `xtol`.
pub fn scan_golden_max<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    points: usize,
    xtol: f64,
) -> Maximum {
    assert!(points >= 3 && hi > lo);
    let step = (hi - lo) / (points - 1) as f64;
    let xs: Vec<f64> = (0..points).map(|i| lo + i as f64 * step).collect();
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut evaluations = points;

    let mut best = Maximum {
        argmax: xs[0],
        value: vs[0],
        evaluations: 0,
    };
    for i in 0..points {
        let left_ok = i == 0 || vs[i] >= vs[i - 1];
        let right_ok = i + 1 == points || vs[i] >= vs[i + 1];
        if !(left_ok && right_ok) {
            continue;
        }
        let a = if i == 0 { lo } else { xs[i - 1] };
        let b = if i + 1 == points { hi } else { xs[i + 1] };
        let (x, v, used) = golden_max(f, a, b, xtol);
        evaluations += used;
        if v > best.value || (v == best.value && x < best.argmax) {
            best = Maximum {
                argmax: x,
                value: v,
                evaluations: 0,
            };
        }
    }
    best.evaluations = evaluations;
    best
}

/// Like [`scan_golden_max`], but consider only interior local maxima whose
/// scanned value exceeds `floor`, and return the highest of them. Boundary
/// maxima (spill-over from humps outside [lo, hi]) do not count. Returns
/// `None` when no interior peak rises above the floor.
pub fn scan_golden_interior_max<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    points: usize,
    xtol: f64,
    floor: f64,
) -> Option<Maximum> {
    assert!(points >= 3 && hi > lo);
    let step = (hi - lo) / (points - 1) as f64;
    let xs: Vec<f64> = (0..points).map(|i| lo + i as f64 * step).collect();
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut evaluations = points;
    let mut found: Option<Maximum> = None;
    for i in 1..points - 1 {
        if !(vs[i] >= vs[i - 1] && vs[i] >= vs[i + 1]) || vs[i] <= floor {
            continue;
        }
        let (x, v, used) = golden_max(f, xs[i - 1], xs[i + 1], xtol);
        evaluations += used;
        if found.as_ref().is_none_or(|best| v > best.value) {
            found = Some(Maximum {
                argmax: x,
                value: v,
                evaluations: 0,
            });
        }
    }
    found.map(|mut m| {
        m.evaluations = evaluations;
        m
    })
}

fn golden_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64, usize) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;
    let (mut best_x, mut best_v) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    while b - a > xtol {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
            evals += 1;
            if f1 > best_v {
                best_x = x1;
                best_v = f1;
            }
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
            evals += 1;
            if f2 > best_v {
                best_x = x2;
                best_v = f2;
            }
        }
    }
    (best_x, best_v, evals)
}
