//! The map γ between primitive ascent sequences in `PA_3(k+1)` and fillings
//! in `M_3(k)`, and its inverse.

use crate::filling::{FillingClass, Square, TriangularFilling};
use crate::seq::{ascent_count, avoids, is_ascent_sequence, is_primitive, IntSequence, Mode};
use crate::{Error, Result};

use super::transform::K;

/// `a_i = i + x_{i+1} - asc(x_1 .. x_{i+1})` for `i = 1..=k`.
pub fn gamma(x: &[usize]) -> Result<TriangularFilling> {
    const MAP: &str = "gamma";
    if x.is_empty() {
        return Err(Error::pre(
            MAP,
            "primitive ascent sequences in the domain have length at least 1",
        ));
    }
    if !is_ascent_sequence(x) || !is_primitive(x) || !avoids(x, K, Mode::Strict) {
        return Err(Error::pre(
            MAP,
            format!("{} is not in PA_3({})", IntSequence::from(x), x.len()),
        ));
    }
    let k = x.len() - 1;
    let mut ones = Vec::with_capacity(k);
    let mut asc = 0;
    for i in 1..=k {
        // asc now counts ascents of x_1 .. x_{i+1}.
        asc += usize::from(x[i - 1] < x[i]);
        let a = (i + x[i])
            .checked_sub(asc)
            .filter(|&a| (1..=i).contains(&a))
            .ok_or_else(|| Error::invariant(MAP, format!("column for row {i} falls outside the shape")))?;
        ones.push(Square::new(i, a));
    }
    let f = TriangularFilling::new(k, ones)?;
    debug_assert!(f.in_class(FillingClass::M, K));
    Ok(f)
}

/// Rebuilds `x` from the columns `a_i`: `x_1 = 0`, `x_2 = 1` and
/// `x_{i+1} = asc(x_1 .. x_i) + [a_{i-1} < a_i] + a_i - i`.
pub fn gamma_inv(f: &TriangularFilling) -> Result<IntSequence> {
    const MAP: &str = "gamma_inv";
    if !f.in_class(FillingClass::M, K) {
        return Err(Error::pre(MAP, format!("{f} is not in M_3({})", f.order())));
    }
    let k = f.order();
    let a: Vec<usize> = f.ones().map(|sq| sq.col).collect();
    let mut x = vec![0];
    if k >= 1 {
        x.push(1);
    }
    for i in 2..=k {
        let bump = usize::from(a[i - 2] < a[i - 1]);
        let next = (ascent_count(&x) + bump + a[i - 1])
            .checked_sub(i)
            .ok_or_else(|| Error::invariant(MAP, format!("negative entry at position {}", i + 1)))?;
        x.push(next);
    }
    Ok(IntSequence::new(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fill(order: usize, ones: &[(usize, usize)]) -> TriangularFilling {
        TriangularFilling::new(order, ones.iter().copied()).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            gamma(&[0, 1, 2, 3, 4, 0, 4, 1, 5]).unwrap(),
            fill(8, &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 1), (6, 5), (7, 3), (8, 7)])
        );
        let m3_example = fill(
            9,
            &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 4), (6, 5), (7, 6), (8, 7), (9, 6)],
        );
        assert_eq!(gamma(&[0, 1, 2, 3, 4, 3, 4, 5, 6, 4]).unwrap(), m3_example);
        assert_eq!(gamma(&[0]).unwrap(), TriangularFilling::empty(0));
        assert_eq!(
            gamma_inv(&m3_example).unwrap().values(),
            &[0, 1, 2, 3, 4, 3, 4, 5, 6, 4]
        );
        assert_eq!(gamma_inv(&fill(1, &[(1, 1)])).unwrap().values(), &[0, 1]);
        assert_eq!(gamma_inv(&TriangularFilling::empty(0)).unwrap().values(), &[0]);
    }

    #[test]
    fn domain_errors() {
        assert!(gamma(&[]).is_err());
        assert!(gamma(&[0, 0]).is_err());
        assert!(gamma(&[0, 2]).is_err());
        // 0 1 2 1 0 has the decreasing triple 2 1 0.
        assert!(gamma(&[0, 1, 2, 1, 0]).is_err());
        assert!(gamma_inv(&fill(2, &[(2, 1)])).is_err());
    }
}
