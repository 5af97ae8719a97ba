//! Conley-Zehnder and Maslov index arithmetic: the closed form for paths
//! generated by a symmetric 2x2 block, the axiom combinators (direct sum,
//! loop shift, inverse), and the virtual-dimension and Riemann-Roch index
//! formulas used as pure integer arithmetic.
//!
//! Rotation-type blocks are specified by their dimensionless rotation ratio
//! `theta` (total turns over the duration), which is rational whenever the
//! generator is `(2 pi / a) Id` with rational `a`. A raw symmetric block
//! with rational entries and positive determinant would need an irrational
//! ratio and is rejected as unsupported; with negative determinant the
//! signature vanishes and the index is 0.

use num_traits::{Signed, Zero};

use crate::rational::{floor_ratio_i64, rat, Rational};
use crate::{Error, Result};

/// Symmetric 2x2 matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricBlock {
    pub s11: Rational,
    pub s12: Rational,
    pub s22: Rational,
}

impl SymmetricBlock {
    pub fn new(s11: Rational, s12: Rational, s22: Rational) -> Self {
        SymmetricBlock { s11, s12, s22 }
    }

    pub fn diag(s11: Rational, s22: Rational) -> Self {
        SymmetricBlock::new(s11, rat(0), s22)
    }

    pub fn det(&self) -> Rational {
        &self.s11 * &self.s22 - &self.s12 * &self.s12
    }

    pub fn trace(&self) -> Rational {
        &self.s11 + &self.s22
    }
}

/// Signature of a nondegenerate symmetric 2x2 matrix: number of positive
/// eigenvalues minus number of negative ones, read off the determinant and
/// trace signs.
pub fn signature(s: &SymmetricBlock) -> Result<i64> {
    let det = s.det();
    if det.is_zero() {
        return Err(Error::DegenerateBlock);
    }
    if det.is_negative() {
        return Ok(0);
    }
    Ok(if s.trace().is_positive() { 2 } else { -2 })
}

/// A path `t -> exp(t J0 S)` on `[0, T]` generated by a symmetric block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockPath {
    /// `S = (2 pi theta / T) Id`: rotation by `theta` total turns. The sign
    /// of `theta` is the sign of the generator.
    Rotation { angle: Rational },
    /// Arbitrary rational symmetric generator over a positive duration.
    Matrix {
        block: SymmetricBlock,
        duration: Rational,
    },
}

impl BlockPath {
    /// Rotation path with a given total ratio `theta` (turns).
    pub fn rotation(angle: Rational) -> Result<Self> {
        if angle.is_zero() {
            return Err(Error::DegenerateBlock);
        }
        Ok(BlockPath::Rotation { angle })
    }

    /// Rotation generated by `S = (2 pi / a) Id` over duration `T`; the
    /// ratio `T / a` is exact, the `pi` cancels.
    pub fn rotation_rate(a: &Rational, duration: &Rational) -> Result<Self> {
        if !a.is_positive() || !duration.is_positive() {
            return Err(Error::Invalid(
                "rotation rate and duration must be positive".into(),
            ));
        }
        BlockPath::rotation(duration / a)
    }

    pub fn matrix(block: SymmetricBlock, duration: Rational) -> Result<Self> {
        if !duration.is_positive() {
            return Err(Error::Invalid("duration must be positive".into()));
        }
        Ok(BlockPath::Matrix { block, duration })
    }
}

/// Conley-Zehnder index of `exp(t J0 S)` on a single 2x2 block.
///
/// For signature `+-2` the value is `(1/2 + floor(|theta|)) * signature`,
/// written uniformly as `1 + 2 floor(theta)` for the signed ratio; integer
/// ratios close the path into a loop and are rejected. For signature `0`
/// the value is `0`.
pub fn cz_exp_block(path: &BlockPath) -> Result<i64> {
    match path {
        BlockPath::Rotation { angle } => {
            if angle.is_integer() {
                return Err(Error::LoopPath);
            }
            Ok(1 + 2 * floor_ratio_i64(angle, &rat(1))?)
        }
        BlockPath::Matrix { block, .. } => {
            let det = block.det();
            if det.is_zero() {
                return Err(Error::DegenerateBlock);
            }
            if det.is_negative() {
                // hyperbolic: no eigenvalue of exp(t J0 S) on the unit circle
                return Ok(0);
            }
            Err(Error::UnsupportedBlock)
        }
    }
}

/// Where an index value came from, kept for audit output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Prop41,
    DirectSum,
    LoopShift,
    Inverse,
    FormulaEllipsoid,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Prop41 => "prop41",
            Provenance::DirectSum => "direct-sum",
            Provenance::LoopShift => "loop-shift",
            Provenance::Inverse => "inverse",
            Provenance::FormulaEllipsoid => "formula-ellipsoid",
        }
    }
}

/// An index value together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexDatum {
    pub value: i64,
    pub provenance: Provenance,
}

impl IndexDatum {
    pub fn from_block(path: &BlockPath) -> Result<Self> {
        Ok(IndexDatum {
            value: cz_exp_block(path)?,
            provenance: Provenance::Prop41,
        })
    }

    pub fn direct_sum(parts: &[IndexDatum]) -> Self {
        IndexDatum {
            value: parts.iter().map(|d| d.value).sum(),
            provenance: Provenance::DirectSum,
        }
    }

    pub fn loop_shift(self, maslov: i64) -> Self {
        IndexDatum {
            value: cz_loop_shift(self.value, maslov),
            provenance: Provenance::LoopShift,
        }
    }

    pub fn inverse(self) -> Self {
        IndexDatum {
            value: cz_inverse(self.value),
            provenance: Provenance::Inverse,
        }
    }
}

/// Product axiom: the index of a direct sum is the sum of the indices.
pub fn cz_direct_sum(parts: &[i64]) -> i64 {
    parts.iter().sum()
}

/// Loop axiom: precomposing with a loop of Maslov index `w` shifts by `2w`.
pub fn cz_loop_shift(cz: i64, maslov: i64) -> i64 {
    cz + 2 * maslov
}

/// Inverse axiom.
pub fn cz_inverse(cz: i64) -> i64 {
    -cz
}

/// Maslov index of the `w`-fold power of the normalization rotation loop.
/// Normalization gives 1 for a single turn; the product axiom makes the
/// assignment additive in `w`.
pub fn maslov_rotation_loop(w: i64) -> i64 {
    w
}

/// Virtual dimension of a moduli space of punctured genus-zero curves.
pub fn virdim_punctured(
    n: i64,
    p_plus: i64,
    p_minus: i64,
    c1: i64,
    cz_plus: i64,
    cz_minus: i64,
) -> Result<i64> {
    if p_plus < 0 || p_minus < 0 {
        return Err(Error::Invalid("puncture counts must be nonnegative".into()));
    }
    Ok((n - 3) * (2 - p_plus - p_minus) + c1 + cz_plus - cz_minus)
}

/// Virtual dimension with a contact-order `k` tangency constraint, which
/// cuts the punctured dimension down by `2n + 2k - 4`.
pub fn virdim_tangency(
    n: i64,
    p_plus: i64,
    p_minus: i64,
    c1: i64,
    cz_plus: i64,
    cz_minus: i64,
    k: i64,
) -> Result<i64> {
    if k < 1 {
        return Err(Error::Invalid("tangency order k must be >= 1".into()));
    }
    Ok(virdim_punctured(n, p_plus, p_minus, c1, cz_plus, cz_minus)? - 2 * n - 2 * k + 4)
}

/// Fredholm index of a Cauchy-Riemann operator on a punctured surface:
/// `n (2 - 2g - z) + 2 c1 + cz_plus - cz_minus`.
pub fn riemann_roch_index(
    n: i64,
    genus: i64,
    punctures: i64,
    c1: i64,
    cz_plus: i64,
    cz_minus: i64,
) -> Result<i64> {
    if genus < 0 || punctures < 0 {
        return Err(Error::Invalid(
            "genus and puncture count must be nonnegative".into(),
        ));
    }
    Ok(n * (2 - 2 * genus - punctures) + 2 * c1 + cz_plus - cz_minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&SymmetricBlock::diag(rat(1), rat(1))).unwrap(), 2);
        assert_eq!(signature(&SymmetricBlock::diag(rat(1), rat(-3))).unwrap(), 0);
        assert_eq!(
            signature(&SymmetricBlock::new(rat(0), rat(1), rat(0))).unwrap(),
            0
        );
        assert_eq!(
            signature(&SymmetricBlock::diag(rat(-1), rat(-2))).unwrap(),
            -2
        );
        assert_eq!(
            signature(&SymmetricBlock::diag(rat(0), rat(1))),
            Err(Error::DegenerateBlock)
        );
    }

    #[test]
    fn block_index_examples() {
        let p = BlockPath::rotation(ratio(3, 10)).unwrap();
        assert_eq!(cz_exp_block(&p).unwrap(), 1);
        // S = (2 pi / a) Id, T = m a1 with m a1 < a
        let p = BlockPath::rotation_rate(&rat(5), &rat(2)).unwrap();
        assert_eq!(cz_exp_block(&p).unwrap(), 1);
        // hyperbolic block: signature 0
        let p = BlockPath::matrix(SymmetricBlock::diag(rat(1), rat(-3)), rat(1)).unwrap();
        assert_eq!(cz_exp_block(&p).unwrap(), 0);
        // elliptic raw block cannot be compared to integer turns exactly
        let p = BlockPath::matrix(SymmetricBlock::diag(rat(1), rat(3)), rat(1)).unwrap();
        assert_eq!(cz_exp_block(&p), Err(Error::UnsupportedBlock));
        // integer ratio closes a loop
        let p = BlockPath::rotation(rat(2)).unwrap();
        assert_eq!(cz_exp_block(&p), Err(Error::LoopPath));
    }

    #[test]
    fn negative_rotation_is_odd_symmetric() {
        for (num, den) in [(1i64, 2i64), (3, 10), (7, 3), (11, 4)] {
            let pos = cz_exp_block(&BlockPath::rotation(ratio(num, den)).unwrap()).unwrap();
            let neg = cz_exp_block(&BlockPath::rotation(ratio(-num, den)).unwrap()).unwrap();
            assert_eq!(neg, -pos);
        }
    }

    #[test]
    fn combinator_examples() {
        assert_eq!(cz_direct_sum(&[1, 1]), 2);
        assert_eq!(cz_direct_sum(&[3, -3]), 0);
        assert_eq!(cz_loop_shift(1, 1), 3);
        assert_eq!(cz_loop_shift(5, 0), 5);
        assert_eq!(cz_loop_shift(0, -2), -4);
        assert_eq!(cz_inverse(1), -1);
        assert_eq!(cz_inverse(0), 0);
        assert_eq!(cz_inverse(7), -7);
        assert_eq!(maslov_rotation_loop(1), 1);
        assert_eq!(maslov_rotation_loop(0), 0);
        assert_eq!(maslov_rotation_loop(3), 3);
    }

    #[test]
    fn inverse_and_loop_commute_up_to_sign() {
        for c in -5..=5 {
            for w in -5..=5 {
                assert_eq!(
                    cz_inverse(cz_loop_shift(c, w)),
                    cz_loop_shift(cz_inverse(c), -w)
                );
            }
        }
    }

    #[test]
    fn virdim_examples() {
        assert_eq!(virdim_punctured(2, 1, 1, 0, 3, 3).unwrap(), 0);
        assert_eq!(virdim_punctured(3, 2, 0, 0, 10, 0).unwrap(), 10);
        assert_eq!(virdim_tangency(2, 1, 0, 0, 3, 0, 1).unwrap(), 0);
        // tangency with k = 0 is rejected; the identity with the punctured
        // formula is virdim_tangency + 2n + 2k - 4 = virdim_punctured
        assert!(virdim_tangency(2, 1, 0, 0, 3, 0, 0).is_err());
        for (n, p, c1, czp, k) in [(2i64, 1i64, 0i64, 5i64, 2i64), (4, 3, 1, 9, 1)] {
            assert_eq!(
                virdim_tangency(n, p, 0, c1, czp, 0, k).unwrap() + 2 * n + 2 * k - 4,
                virdim_punctured(n, p, 0, c1, czp, 0).unwrap()
            );
        }
    }

    #[test]
    fn riemann_roch_examples() {
        // line bundle over the closed sphere
        assert_eq!(riemann_roch_index(1, 0, 0, 0, 0, 0).unwrap(), 2);
        // torus Euler characteristic
        assert_eq!(riemann_roch_index(2, 1, 0, 0, 0, 0).unwrap(), 0);
        // n = 1 punctured sphere: index 2 + 2 sum (m_i - 1), each puncture
        // carrying index -1 and c1 the total multiplicity
        let multiplicities = [3i64, 1, 4];
        let p = multiplicities.len() as i64;
        let c1: i64 = multiplicities.iter().sum();
        let expected = 2 + 2 * (c1 - p);
        assert_eq!(
            riemann_roch_index(1, 0, p, c1, -p, 0).unwrap(),
            expected
        );
    }

    #[test]
    fn index_datum_parity_of_direct_sums() {
        // sums of odd block indices have the parity of the block count
        let parts = [
            IndexDatum::from_block(&BlockPath::rotation(ratio(3, 10)).unwrap()).unwrap(),
            IndexDatum::from_block(&BlockPath::rotation(ratio(7, 3)).unwrap()).unwrap(),
            IndexDatum::from_block(&BlockPath::rotation(ratio(-1, 2)).unwrap()).unwrap(),
        ];
        for take in 1..=parts.len() {
            let sum = IndexDatum::direct_sum(&parts[..take]);
            assert_eq!(sum.value.rem_euclid(2), (take as i64).rem_euclid(2));
            assert_eq!(sum.provenance, Provenance::DirectSum);
        }
    }
}
