//! Castling transform on descriptors of product actions: the pair
//! G x SL(n) on V(m) (x) C^n trades places with G x SL(m-n) on
//! V(m)* (x) C^(m-n).  Descriptor-level bookkeeping only.

use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CastlingTriple {
    /// Dimensions of the fixed tensor factors making up V(m).
    pub factor_dims: Vec<usize>,
    /// Product dimension of the fixed factor.
    pub m: usize,
    /// Size of the special linear factor.
    pub n: usize,
    /// Whether the fixed factor appears dualized.
    pub dualized: bool,
}

pub fn castling_partner(t: &CastlingTriple) -> Result<CastlingTriple> {
    if t.n < 1 || t.m <= t.n {
        return Err(Error::Case(format!(
            "castling needs m > n >= 1, got m={} n={}",
            t.m, t.n
        )));
    }
    Ok(CastlingTriple {
        factor_dims: t.factor_dims.clone(),
        m: t.m,
        n: t.m - t.n,
        dualized: !t.dualized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partners() {
        let t = CastlingTriple { factor_dims: vec![3], m: 3, n: 1, dualized: false };
        let p = castling_partner(&t).unwrap();
        assert_eq!(p.n, 2);
        assert!(p.dualized);

        let t = CastlingTriple { factor_dims: vec![5], m: 5, n: 2, dualized: false };
        assert_eq!(castling_partner(&t).unwrap().n, 3);
    }

    #[test]
    fn partner_is_an_involution() {
        for (m, n) in [(3usize, 1usize), (5, 2), (7, 3), (10, 1)] {
            let t = CastlingTriple { factor_dims: vec![m], m, n, dualized: false };
            let back = castling_partner(&castling_partner(&t).unwrap()).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn degenerate_sizes_are_rejected() {
        let t = CastlingTriple { factor_dims: vec![2], m: 2, n: 2, dualized: false };
        assert!(castling_partner(&t).is_err());
        let t = CastlingTriple { factor_dims: vec![2], m: 2, n: 3, dualized: false };
        assert!(castling_partner(&t).is_err());
        let t = CastlingTriple { factor_dims: vec![2], m: 2, n: 0, dualized: false };
        assert!(castling_partner(&t).is_err());
    }
}
