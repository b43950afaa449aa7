use super::CubeError;
use crate::trees::TreeFamily;

/// Truncated power series with exact coefficients; index is the number of
/// polygons.
type Series = Vec<u128>;

fn mul(a: &[u128], b: &[u128], len: usize, height: usize) -> Result<Series, CubeError> {
    let mut out = vec![0u128; len];
    for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (j, &y) in b.iter().enumerate().take(len.saturating_sub(i)) {
            let term = x.checked_mul(y).ok_or(CubeError::Overflow(height))?;
            out[i + j] = out[i + j].checked_add(term).ok_or(CubeError::Overflow(height))?;
        }
    }
    Ok(out)
}

fn one_plus_pow(a: &[u128], exponent: usize, len: usize, height: usize) -> Result<Series, CubeError> {
    let mut base = a.to_vec();
    base[0] += 1;
    let mut acc = vec![0u128; len];
    acc[0] = 1;
    for _ in 0..exponent {
        acc = mul(&acc, &base, len, height)?;
    }
    Ok(acc)
}

/// Number of spine surfaces of each height `1..=max_height`.
///
/// Counts rooted subtrees through generating functions: a subtree hanging
/// below a non-central polygon satisfies `A = x (1 + A)^c` where `c` is the
/// child count, and the center contributes `x` times one factor per
/// neighbour.
pub fn spine_sublevel_census(family: TreeFamily, max_height: usize) -> Result<Vec<(usize, u128)>, CubeError> {
    let len = max_height + 1;
    let spine = match family {
        TreeFamily::Higman { n, m } => {
            let mut below = vec![0u128; len];
            for h in 1..len {
                below[h] = one_plus_pow(&below, n as usize, h, h)?[h - 1];
            }
            shift(one_plus_pow(&below, m as usize, len, max_height)?)
        }
        TreeFamily::Lamplighter => {
            // Below a ray polygon only the ray continues; below a line polygon
            // the line continues one way and a ray starts.
            let ray: Series = (0..len).map(|h| u128::from(h > 0)).collect();
            let mut line = vec![0u128; len];
            for h in 1..len {
                let one_line = one_plus_pow(&line, 1, h, h)?;
                line[h] = mul(&one_line, &one_plus_pow(&ray, 1, h, h)?, h, h)?[h - 1];
            }
            let two_lines = one_plus_pow(&line, 2, len, max_height)?;
            shift(mul(&two_lines, &one_plus_pow(&ray, 1, len, max_height)?, len, max_height)?)
        }
    };
    Ok((1..len).map(|h| (h, spine[h])).collect())
}

/// Multiplies by `x`.
fn shift(series: Series) -> Series {
    let mut out = vec![0u128; series.len()];
    out[1..].copy_from_slice(&series[..series.len() - 1]);
    out
}
