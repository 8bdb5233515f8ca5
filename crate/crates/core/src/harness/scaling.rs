use crate::error::{Error, Result};

/// √((N/m)·ln(N/m)), the reference curve for first-peak times.
pub fn scaling_reference(vertex_count: usize, m: usize) -> Result<f64> {
    if m == 0 || m >= vertex_count {
        return Err(Error::InvalidScalingArgs { n: vertex_count, m });
    }
    let ratio = vertex_count as f64 / m as f64;
    Ok((ratio * ratio.ln()).sqrt())
}

/// Ordinary least squares of ln(value) on ln(m). Returns (slope, intercept).
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 2 {
        return Err(Error::InvalidFit(format!("need at least 2 points, got {}", points.len())));
    }
    if let Some(&(x, y)) = points.iter().find(|&&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::InvalidFit(format!("non-positive point ({x}, {y})")));
    }
    let n = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidFit("all abscissae are equal".to_string()));
    }
    let slope = sxy / sxx;
    Ok((slope, mean_y - slope * mean_x))
}

/// Up to `count` distinct integers log-spaced over [lo, hi], always including both ends.
pub fn log_spaced_integers(lo: usize, hi: usize, count: usize) -> Vec<usize> {
    if count <= 1 || lo >= hi {
        return vec![lo];
    }
    let (a, b) = ((lo.max(1)) as f64, hi as f64);
    let mut out: Vec<usize> = (0..count)
        .map(|i| {
            let f = i as f64 / (count - 1) as f64;
            (a * (b / a).powf(f)).round() as usize
        })
        .collect();
    out[0] = lo;
    out.dedup();
    out
}

/// `count` points log-spaced over [lo, hi].
pub fn log_space(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    (0..count)
        .map(|i| lo * (hi / lo).powf(i as f64 / (count - 1) as f64))
        .collect()
}

/// `count` points evenly spaced over [lo, hi].
pub fn lin_space(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert!((scaling_reference(10_000, 1).unwrap() - 303.49).abs() < 0.01);
        assert!((scaling_reference(10_000, 100).unwrap() - 21.46).abs() < 0.01);
        assert!(scaling_reference(100, 100).is_err());
        assert!(scaling_reference(100, 0).is_err());
    }

    #[test]
    fn exact_power_law() {
        let pts: Vec<_> = [1.0, 3.0, 10.0, 40.0, 250.0].iter().map(|&m: &f64| (m, 7.0 * m.powf(-0.5))).collect();
        let (slope, intercept) = fit_loglog_slope(&pts).unwrap();
        assert!((slope + 0.5).abs() < 1e-9);
        assert!((intercept - 7f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn degenerate_fits() {
        assert!(fit_loglog_slope(&[(5.0, 1.0), (5.0, 2.0)]).is_err());
        assert!(fit_loglog_slope(&[(1.0, 1.0)]).is_err());
        assert!(fit_loglog_slope(&[(1.0, 1.0), (2.0, 0.0)]).is_err());
    }

    #[test]
    fn spacings() {
        assert_eq!(log_spaced_integers(1, 1000, 4), vec![1, 10, 100, 1000]);
        let v = log_spaced_integers(1, 1000, 30);
        assert_eq!((v[0], *v.last().unwrap()), (1, 1000));
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        let l = log_space(0.001, 10.0, 5);
        assert!((l[1] - 0.01).abs() < 1e-15 && (l[4] - 10.0).abs() < 1e-12);
        assert_eq!(lin_space(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
    }
}
