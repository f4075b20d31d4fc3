use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Minimal elliptic surface with Euler number `12d`, base genus `q` and
/// multiple fibres of the given multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    d: u32,
    q: u32,
    multiplicities: Vec<u32>,
}

/// Which clause of the realization theorem applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Rational,
    Enriques,
    K3,
    Pg0NonRational,
    PgPositive,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Rational => "RATIONAL",
            CaseTag::Enriques => "ENRIQUES",
            CaseTag::K3 => "K3",
            CaseTag::Pg0NonRational => "PG0_NONRATIONAL",
            CaseTag::PgPositive => "PG_POSITIVE",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Numerical invariants of a [`SurfaceSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceInvariants {
    pub e: i64,
    pub b1: i64,
    pub b2: i64,
    pub b_plus: i64,
    pub b_minus: i64,
    pub p_g: i64,
    /// lcm of the multiplicities, 1 without multiple fibres.
    pub m: i64,
    /// The canonical class is `kappa` times the primitive fibre class.
    pub kappa: i64,
    pub parity: Parity,
    pub case_tag: CaseTag,
}

impl SurfaceSpec {
    /// Validates `d ≥ 1`, `q ≥ 0`, every multiplicity `≥ 2`; sorts the multiplicities.
    pub fn new(d: i64, q: i64, multiplicities: &[i64]) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidSpec(format!("d = {d} must be at least 1")));
        }
        if q < 0 {
            return Err(Error::InvalidSpec(format!("q = {q} must be non-negative")));
        }
        let d = u32::try_from(d).map_err(|_| Error::InvalidSpec(format!("d = {d} too large")))?;
        let q = u32::try_from(q).map_err(|_| Error::InvalidSpec(format!("q = {q} too large")))?;
        let mut ms = Vec::with_capacity(multiplicities.len());
        for &m in multiplicities {
            if m < 2 {
                return Err(Error::InvalidMultiplicity(m));
            }
            ms.push(u32::try_from(m).map_err(|_| Error::InvalidMultiplicity(m))?);
        }
        ms.sort_unstable();
        Ok(SurfaceSpec { d, q, multiplicities: ms })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn lcm(&self) -> i64 {
        self.multiplicities.iter().fold(1i64, |acc, &m| acc.lcm(&i64::from(m)))
    }

    /// `κ = m(2q − 2 + d) + Σ (mᵢ − 1)(m / mᵢ)`.
    pub fn kappa(&self) -> i64 {
        let m = self.lcm();
        let base = m * (2 * i64::from(self.q) - 2 + i64::from(self.d));
        let extra: i64 = self
            .multiplicities
            .iter()
            .map(|&mi| (i64::from(mi) - 1) * (m / i64::from(mi)))
            .sum();
        base + extra
    }

    pub fn invariants(&self) -> SurfaceInvariants {
        let d = i64::from(self.d);
        let q = i64::from(self.q);
        let e = 12 * d;
        let b1 = 2 * q;
        let b2 = e - 2 + 2 * b1;
        let p_g = d + q - 1;
        let b_plus = 2 * p_g + 1;
        let b_minus = b2 - b_plus;
        let kappa = self.kappa();
        let parity = if kappa % 2 == 0 { Parity::Even } else { Parity::Odd };
        let case_tag = match (kappa.signum(), p_g) {
            (-1, _) => CaseTag::Rational,
            (0, 0) => CaseTag::Enriques,
            (0, _) => CaseTag::K3,
            (_, 0) => CaseTag::Pg0NonRational,
            _ => CaseTag::PgPositive,
        };
        SurfaceInvariants {
            e,
            b1,
            b2,
            b_plus,
            b_minus,
            p_g,
            m: self.lcm(),
            kappa,
            parity,
            case_tag,
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, q={}, m={:?})", self.d, self.q, self.multiplicities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(d: i64, q: i64, ms: &[i64]) -> SurfaceInvariants {
        SurfaceSpec::new(d, q, ms).unwrap().invariants()
    }

    #[test]
    fn case_table() {
        let k3 = inv(2, 0, &[]);
        assert_eq!((k3.p_g, k3.kappa, k3.case_tag), (1, 0, CaseTag::K3));
        assert_eq!((k3.b_plus, k3.b_minus), (3, 19));
        let enriques = inv(1, 0, &[2, 2]);
        assert_eq!((enriques.p_g, enriques.m, enriques.kappa), (0, 2, 0));
        assert_eq!(enriques.case_tag, CaseTag::Enriques);
        let dolgachev = inv(1, 0, &[2, 3]);
        assert_eq!((dolgachev.m, dolgachev.kappa), (6, 1));
        assert_eq!(dolgachev.case_tag, CaseTag::Pg0NonRational);
        assert_eq!(inv(1, 0, &[]).case_tag, CaseTag::Rational);
        assert_eq!(inv(1, 0, &[5]).case_tag, CaseTag::Rational);
        assert_eq!(inv(3, 0, &[]).case_tag, CaseTag::PgPositive);
    }

    #[test]
    fn invariant_relations() {
        for d in 1..4 {
            for q in 0..3 {
                let i = inv(d, q, &[2, 3]);
                assert_eq!(i.e, 12 * d);
                assert_eq!(i.b_plus - i.b_minus, -8 * d);
                assert_eq!(i.b_plus + i.b_minus, i.b2);
            }
        }
    }

    #[test]
    fn validation() {
        assert_eq!(SurfaceSpec::new(0, 0, &[]), Err(Error::InvalidSpec("d = 0 must be at least 1".into())));
        assert_eq!(SurfaceSpec::new(1, 0, &[1]), Err(Error::InvalidMultiplicity(1)));
        assert_eq!(SurfaceSpec::new(1, 0, &[3, 2]).unwrap().multiplicities(), &[2, 3]);
    }
}
