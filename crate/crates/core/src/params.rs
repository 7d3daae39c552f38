use crate::error::{Error, Result};

/// The exponent `p ≥ 1` of the tube domain together with `K = (2p+1)/3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TubeParams {
    p: u32,
}

impl TubeParams {
    pub fn new(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidInput("p must be an integer >= 1".into()));
        }
        Ok(Self { p })
    }

    /// Parses `p` from text, rejecting anything that is not a positive
    /// integer (the domain has no complete Kähler-Einstein metric for
    /// non-integer exponents).
    pub fn parse(s: &str) -> Result<Self> {
        let p: u32 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("p must be a positive integer, got `{s}`")))?;
        Self::new(p)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn pf(&self) -> f64 {
        f64::from(self.p)
    }

    /// `K = (2p+1)/3`.
    pub fn k(&self) -> f64 {
        f64::from(2 * self.p + 1) / 3.0
    }

    /// `pK = p(2p+1)/3`.
    pub fn pk(&self) -> f64 {
        f64::from(self.p * (2 * self.p + 1)) / 3.0
    }

    /// `K` as a reduced rational string, e.g. `"5/3"` or `"1"`.
    pub fn k_string(&self) -> String {
        let num = 2 * self.p + 1;
        if num % 3 == 0 {
            format!("{}", num / 3)
        } else {
            format!("{num}/3")
        }
    }

    /// Inverse of [`TubeParams::k_string`]; accepts any fraction `a/b` or
    /// integer equal to `K`.
    pub fn k_matches(&self, s: &str) -> bool {
        let parsed = match s.split_once('/') {
            Some((a, b)) => match (a.trim().parse::<i64>(), b.trim().parse::<i64>()) {
                (Ok(a), Ok(b)) if b != 0 => Some((a, b)),
                _ => None,
            },
            None => s.trim().parse::<i64>().ok().map(|a| (a, 1)),
        };
        matches!(parsed, Some((a, b)) if a * 3 == b * i64::from(2 * self.p + 1))
    }

    /// `1/(2p)`, the exponent of the anisotropic dilation on `z₂`.
    pub fn inv_2p(&self) -> f64 {
        0.5 / self.pf()
    }
}
