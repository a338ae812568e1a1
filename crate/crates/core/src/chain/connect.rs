use serde::Serialize;

use super::homology_z;
use super::ChainComplexZ;
use crate::abgroup::AbGroup;
use crate::error::{Error, Result};
use crate::homotopy::pi1;
use crate::sset::FinSSet;

/// Evidence that `X` is `n`-connected: vanishing reduced integral homology in
/// degrees `0..=n` and, for `n >= 1`, a proof that `π₁(X)` is trivial.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityReport {
    pub target: usize,
    /// `H̃_i(X; Z)` as canonical text, for `i = 0..=n`.
    pub homology: Vec<String>,
    pub homology_vanishes: bool,
    /// `None` when `n = 0`.
    pub pi1_trivial: Option<bool>,
    pub certified: bool,
}

pub fn is_n_connected_certificate(x: &FinSSet, n: usize) -> Result<ConnectivityReport> {
    x.require_level(n + 1, n)?;
    if !x.is_connected() {
        return Err(Error::NotConnected);
    }
    let c = ChainComplexZ::reduced(x);
    let groups: Vec<AbGroup> = (0..=n).map(|i| homology_z(&c, i)).collect();
    let homology_vanishes = groups.iter().all(AbGroup::is_trivial);
    let pi1_trivial = if n >= 1 {
        Some(pi1(x)?.group.prove_trivial().is_some())
    } else {
        None
    };
    Ok(ConnectivityReport {
        target: n,
        homology: groups.iter().map(ToString::to_string).collect(),
        homology_vanishes,
        pi1_trivial,
        certified: homology_vanishes && pi1_trivial.unwrap_or(true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{smash, sphere};

    #[test]
    fn spheres() {
        assert!(is_n_connected_certificate(&sphere(2, 3).unwrap(), 1).unwrap().certified);
        let s1 = sphere(1, 3).unwrap();
        assert!(!is_n_connected_certificate(&s1, 1).unwrap().certified);
        let s11 = smash(&s1, &s1).unwrap();
        assert!(is_n_connected_certificate(s11.sset(), 1).unwrap().certified);
    }
}
