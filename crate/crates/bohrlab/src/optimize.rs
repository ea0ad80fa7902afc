//! One-dimensional search primitives: bisection against a monotone map
//! and a scan-bracketed golden-section minimizer.

/// Largest `r` in `[lo, hi]` with `f(r) <= target`, for `f` monotone
/// non-decreasing, located by bisection to absolute tolerance `tol`.
///
/// Returns `lo` if even `f(lo)` exceeds the target and `hi` if the
/// target is never reached.
pub fn largest_below<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, target: f64, tol: f64) -> f64 {
    debug_assert!(lo <= hi);
    if f(lo) > target {
        return lo;
    }
    if f(hi) <= target {
        return hi;
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > tol {
        let m = 0.5 * (a + b);
        if f(m) <= target {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Result of a scalar minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub argmin: f64,
    pub value: f64,
}

/// Minimize `f` on `[lo, hi]`.
///
/// A uniform coarse scan (so no unimodality assumption is needed to
/// find the right basin) brackets the best sample, golden-section
/// shrinks the bracket to `xtol`, and a final parabolic fit polishes
/// the argmin when the fit stays inside the bracket.
pub fn scan_golden_min<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, scan_points: usize, xtol: f64) -> Minimum {
    debug_assert!(scan_points >= 3);
    let n = scan_points;
    let step = (hi - lo) / (n - 1) as f64;
    let mut best_i = 0usize;
    let mut best_v = f64::INFINITY;
    let values: Vec<f64> = (0..n)
        .map(|i| {
            let x = lo + step * i as f64;
            let v = f(x);
            if v < best_v {
                best_v = v;
                best_i = i;
            }
            v
        })
        .collect();
    let _ = values;
    let mut a = if best_i == 0 { lo } else { lo + step * (best_i - 1) as f64 };
    let mut b = if best_i == n - 1 { hi } else { lo + step * (best_i + 1) as f64 };

    // Golden-section interior points.
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > xtol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let (mut xm, mut fm) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };

    // One parabolic refinement through (a, xm, b).
    let (fa, fb) = (f(a), f(b));
    let denom = (xm - a) * (fm - fb) - (xm - b) * (fm - fa);
    if denom.abs() > 0.0 {
        let num = (xm - a) * (xm - a) * (fm - fb) - (xm - b) * (xm - b) * (fm - fa);
        let cand = xm - 0.5 * num / denom;
        if cand.is_finite() && cand > a && cand < b {
            let fc = f(cand);
            if fc < fm {
                xm = cand;
                fm = fc;
            }
        }
    }
    Minimum { argmin: xm, value: fm }
}
