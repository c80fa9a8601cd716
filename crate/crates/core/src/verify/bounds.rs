//! Earlier sufficient conditions for 2-connectivity, instantiated at
//! connectivity two, next to the sharp threshold.

use serde::Serialize;

use super::VerifyError;
use crate::extremal::threshold;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PriorBound {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PriorBoundTable {
    pub d: usize,
    pub n: usize,
    pub bounds: Vec<PriorBound>,
    pub new_threshold: f64,
}

impl PriorBoundTable {
    /// `new_threshold - bound` for each prior bound, in table order.
    pub fn margins(&self) -> Vec<f64> {
        self.bounds.iter().map(|b| self.new_threshold - b.value).collect()
    }
}

pub fn prior_bounds(d: usize, n: usize) -> Result<PriorBoundTable, VerifyError> {
    if n <= d + 1 {
        return Err(VerifyError::DegenerateBound { d, n });
    }
    let new_threshold = threshold(d)?.value;
    let (df, nf) = (d as f64, n as f64);
    let gap = nf - df - 1.0;
    let cioaba_gu = if d % 2 == 0 {
        (df - 2.0 + (df * df + 12.0).sqrt()) / 2.0
    } else {
        (df - 2.0 + (df * df + 8.0).sqrt()) / 2.0
    };
    let abiad = df - df * nf / (2.0 * (df + 1.0) * gap);
    let liu = df - (df - 1.0) * nf * df / (2.0 * (df + 1.0) * gap);
    let hong = df - nf * df / ((nf - 1.0) + 4.0 * df * gap);
    Ok(PriorBoundTable {
        d,
        n,
        bounds: vec![
            PriorBound {
                name: "cioaba_gu",
                value: cioaba_gu,
            },
            PriorBound {
                name: "abiad_et_al",
                value: abiad,
            },
            PriorBound { name: "liu", value: liu },
            PriorBound {
                name: "hong_et_al",
                value: hong,
            },
        ],
        new_threshold,
    })
}
