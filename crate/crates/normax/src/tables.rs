//! The three canonical comparison tables: rate-constant upper bounds,
//! scaled distances per constant family, and the location constants
//! themselves — each with the standard row and column sets.

use crate::error::Result;
use crate::norming::{location, norming_pair, ApproxMethod, AuxiliaryKind, NormingPair};
use crate::parallel;
use crate::size::LogSize;
use crate::specfn::gumbel_pdf;
use crate::verify::{theorem_constant, theorem_constant_tilde};

fn sizes(tokens: &[&str]) -> Vec<LogSize> {
    tokens.iter().map(|s| s.parse().unwrap()).collect()
}

/// Sizes of the rate-constant table: 16 … 10^100.
pub fn table1_sizes() -> Vec<LogSize> {
    sizes(&[
        "16", "30", "50", "1e2", "1e4", "1e6", "1e10", "1e20", "1e100",
    ])
}

/// Two rows: C(n₀) and its explicit upper bound.
pub fn table1() -> Result<Vec<Vec<f64>>> {
    let ns = table1_sizes();
    let mut c_row = Vec::with_capacity(ns.len());
    let mut tilde_row = Vec::with_capacity(ns.len());
    for &n0 in &ns {
        c_row.push(theorem_constant(n0)?);
        tilde_row.push(theorem_constant_tilde(n0)?);
    }
    Ok(vec![c_row, tilde_row])
}

/// Sizes of the distance table: 10 … 10^60.
pub fn table2_sizes() -> Vec<LogSize> {
    sizes(&["10", "1e3", "1e10", "1e30", "1e50", "1e60"])
}

/// The five constant families compared by the distance table, in row order.
pub fn table2_specs() -> [(ApproxMethod, AuxiliaryKind); 5] {
    [
        (ApproxMethod::Exact, AuxiliaryKind::FisherTippett),
        (ApproxMethod::Exact, AuxiliaryKind::Hall),
        (ApproxMethod::Exact, AuxiliaryKind::Canonical),
        (ApproxMethod::HallStar, AuxiliaryKind::FisherTippett),
        (ApproxMethod::HallStar, AuxiliaryKind::Hall),
    ]
}

/// 5 × 6 matrix of scaled distances (trailing peak × ln n).
pub fn table2(tol: f64, jobs: usize) -> Result<Vec<Vec<f64>>> {
    let ns = table2_sizes();
    let specs = table2_specs();
    let cells: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|r| (0..ns.len()).map(move |c| (r, c)))
        .collect();
    let values = parallel::map_ordered(jobs, &cells, |&(r, c)| -> Result<f64> {
        let (m, a) = specs[r];
        let pair = norming_pair(m, a, ns[c])?;
        Ok(crate::distance::dominant_peak_distance(ns[c], &pair, tol)?.scaled)
    });
    let mut rows = vec![vec![0.0; ns.len()]; specs.len()];
    for ((r, c), v) in cells.into_iter().zip(values) {
        rows[r][c] = v?;
    }
    Ok(rows)
}

/// Sizes of the location-constant table: 10 … 10^60.
pub fn table3_sizes() -> Vec<LogSize> {
    sizes(&["10", "1e2", "1e5", "1e10", "1e30", "1e60"])
}

/// Row order of the location-constant table.
pub fn table3_methods() -> [ApproxMethod; 6] {
    ApproxMethod::TABLE
}

/// 6 × 6 matrix of location constants.
pub fn table3() -> Result<Vec<Vec<f64>>> {
    let ns = table3_sizes();
    table3_methods()
        .iter()
        .map(|&m| ns.iter().map(|&n| location(m, n)).collect())
        .collect()
}

/// Density curves on a uniform grid: the abscissae, the Gumbel density,
/// and one column of normalized-maximum density per pair.
pub fn density_grid(
    n: LogSize,
    pairs: &[NormingPair],
    lo: f64,
    hi: f64,
    step: f64,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    if !(step > 0.0 && hi > lo) {
        return Err(crate::error::Error::Domain(format!(
            "bad density grid {lo}:{hi}:{step}"
        )));
    }
    let count = ((hi - lo) / step).floor() as usize + 1;
    let xs: Vec<f64> = (0..count).map(|i| lo + i as f64 * step).collect();
    let mut columns = Vec::with_capacity(pairs.len() + 1);
    columns.push(xs.iter().map(|&x| gumbel_pdf(x)).collect());
    for pair in pairs {
        columns.push(
            xs.iter()
                .map(|&x| crate::distance::normalized_max_pdf(n, pair, x))
                .collect(),
        );
    }
    Ok((xs, columns))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_shape_and_sanity() {
        let rows = table1().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].len(), 9);
        // C row decreases toward 1/3; the bound row dominates it
        for (c, t) in rows[0].iter().zip(&rows[1]) {
            assert!(t >= c);
            assert!(*c > 1.0 / 3.0 && *c <= 1.0);
        }
        for w in rows[0].windows(2) {
            assert!(w[1] < w[0]);
        }
    }

    #[test]
    fn table3_matches_published_matrix() {
        let published: [[f64; 6]; 6] = [
            [1.28155, 2.32635, 4.26489, 6.36134, 11.46402, 16.39728],
            [1.27115, 2.32632, 4.26488, 6.36132, 11.46402, 16.39728],
            [1.18090, 2.31828, 4.26430, 6.36123, 11.46401, 16.39728],
            [1.43165, 2.37533, 4.27575, 6.36492, 11.46467, 16.39750],
            [1.45508, 2.37607, 4.27535, 6.36478, 11.46465, 16.39750],
            [1.36192, 2.36625, 4.28019, 6.36855, 11.46611, 16.39821],
        ];
        let rows = table3().unwrap();
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert!(
                    (v - published[r][c]).abs() <= 2e-5,
                    "entry ({r},{c}): {v} vs {}",
                    published[r][c]
                );
            }
        }
    }

    #[test]
    fn density_columns_normalize() {
        let n: LogSize = "100".parse().unwrap();
        let pairs = [
            norming_pair(ApproxMethod::Exact, AuxiliaryKind::FisherTippett, n).unwrap(),
            norming_pair(ApproxMethod::HallStar, AuxiliaryKind::Hall, n).unwrap(),
        ];
        let (xs, cols) = density_grid(n, &pairs, -5.0, 12.0, 0.01).unwrap();
        assert_eq!(cols.len(), 3);
        for col in &cols {
            let mass: f64 = col.iter().sum::<f64>() * 0.01;
            assert!((mass - 1.0).abs() < 1e-3, "mass={mass}");
        }
        assert_eq!(xs.len(), cols[0].len());
        // the exact/Fisher–Tippett curve hugs the Gumbel tighter than the
        // Hall one, uniformly on the grid
        let gap_ft: f64 = cols[0]
            .iter()
            .zip(&cols[1])
            .map(|(g, f)| (g - f).abs())
            .fold(0.0, f64::max);
        let gap_hall: f64 = cols[0]
            .iter()
            .zip(&cols[2])
            .map(|(g, h)| (g - h).abs())
            .fold(0.0, f64::max);
        assert!(gap_ft < gap_hall, "ft={gap_ft} hall={gap_hall}");
    }

    #[test]
    fn density_grid_rejects_bad_spec() {
        let n: LogSize = "100".parse().unwrap();
        assert!(density_grid(n, &[], 1.0, 0.0, 0.1).is_err());
        assert!(density_grid(n, &[], 0.0, 1.0, 0.0).is_err());
    }
}
