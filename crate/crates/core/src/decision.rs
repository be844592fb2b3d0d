use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

/// Which check rejected a pair of homomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailedCondition {
    /// Generator images differ in cycle type.
    GeneratorTypes,
    /// Second-generator components on the fixed points of the first differ in cycle type.
    FixPart,
    /// Induced permutations of some block's cycles differ in cycle type.
    BarType,
    /// Rotation exponents on cycles fixed by the cycles action differ.
    Exponents,
    /// Orbit power residues differ.
    OrbitPowers,
    /// Reflection components on some block differ in cycle type.
    BlockType,
    None,
}

impl FailedCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            FailedCondition::GeneratorTypes => "generator-types",
            FailedCondition::FixPart => "fix-part",
            FailedCondition::BarType => "bar-type",
            FailedCondition::Exponents => "exponents",
            FailedCondition::OrbitPowers => "orbit-powers",
            FailedCondition::BlockType => "block-type",
            FailedCondition::None => "none",
        }
    }
}

/// Verdict for a pair of homomorphisms `phi`, `psi`.
///
/// When `witness` is present, conjugating each generator image of `phi` by it
/// yields the matching generator image of `psi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyDecision {
    pub verdict: bool,
    pub failed_condition: FailedCondition,
    pub witness: Option<Permutation>,
}

impl ConjugacyDecision {
    pub(crate) fn reject(failed: FailedCondition) -> Self {
        ConjugacyDecision {
            verdict: false,
            failed_condition: failed,
            witness: None,
        }
    }

    pub(crate) fn accept() -> Self {
        ConjugacyDecision {
            verdict: true,
            failed_condition: FailedCondition::None,
            witness: None,
        }
    }
}
