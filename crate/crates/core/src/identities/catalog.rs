//! Named identities used throughout the searches, stored in bracket
//! notation and parsed on demand against an operation list.

use super::IdentityError;
use crate::terms::{consequence_set, parse_poly, MultilinearPoly, OperationSymbol};

/// Identities with fixed names. `[..]` is the commutator, `<..>` the
/// translator, `{..}` the weakly anticommutative operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnownIdentity {
    /// [x,y,z] + [y,x,z]
    CommutatorSkew,
    /// <x,y,z> + <y,z,x> + <z,x,y>
    TranslatorCyclic,
    /// [x,y,z] + [z,y,x] − <x,y,z> − <z,y,x>
    Comtrans,
    /// T_{x,z}(v,w,y) + T_{x,z}(w,y,v) + T_{x,z}(y,v,w) with
    /// T_{x,z}(v,w,y) = [[v,w,x],y,z] − [v,w,[x,y,z]]
    CommutatorDegree5,
    /// R_{y,z}(<v,w,x>) = <<v,w,x>,y,z> − <<v,y,z>,w,x> − <v,<w,y,z>,x> − <v,w,<x,y,z>>
    TranslatorDegree5,
    MixedA,
    MixedB,
    MixedC,
    /// Σ over S_3 of {x^σ, y^σ, z^σ}
    WacSymmetricSum,
    /// Derivation-style identity T_{y,z}({v,w,x}) for the weakly
    /// anticommutative operation, with T_{y,z}(a) = {a,y,z} + {a,z,y}.
    WacDerivation,
}

impl KnownIdentity {
    pub const ALL: [KnownIdentity; 10] = [
        KnownIdentity::CommutatorSkew,
        KnownIdentity::TranslatorCyclic,
        KnownIdentity::Comtrans,
        KnownIdentity::CommutatorDegree5,
        KnownIdentity::TranslatorDegree5,
        KnownIdentity::MixedA,
        KnownIdentity::MixedB,
        KnownIdentity::MixedC,
        KnownIdentity::WacSymmetricSum,
        KnownIdentity::WacDerivation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KnownIdentity::CommutatorSkew => "commutator-skew",
            KnownIdentity::TranslatorCyclic => "translator-cyclic",
            KnownIdentity::Comtrans => "comtrans",
            KnownIdentity::CommutatorDegree5 => "commutator-degree5",
            KnownIdentity::TranslatorDegree5 => "translator-degree5",
            KnownIdentity::MixedA => "mixed-a",
            KnownIdentity::MixedB => "mixed-b",
            KnownIdentity::MixedC => "mixed-c",
            KnownIdentity::WacSymmetricSum => "wac-symmetric-sum",
            KnownIdentity::WacDerivation => "wac-derivation",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            KnownIdentity::CommutatorSkew => "[x,y,z] + [y,x,z]",
            KnownIdentity::TranslatorCyclic => "<x,y,z> + <y,z,x> + <z,x,y>",
            KnownIdentity::Comtrans => "[x,y,z] + [z,y,x] - <x,y,z> - <z,y,x>",
            KnownIdentity::CommutatorDegree5 => {
                "[[v,w,x],y,z] - [v,w,[x,y,z]] + [[w,y,x],v,z] - [w,y,[x,v,z]] \
                 + [[y,v,x],w,z] - [y,v,[x,w,z]]"
            }
            KnownIdentity::TranslatorDegree5 => {
                "<<v,w,x>,y,z> - <<v,y,z>,w,x> - <v,<w,y,z>,x> - <v,w,<x,y,z>>"
            }
            KnownIdentity::MixedA => {
                "[[v,w,x],y,z] + [[x,v,y],w,z] - [<v,w,x>,y,z] + [<v,y,w>,x,z] - [<x,y,w>,v,z]"
            }
            KnownIdentity::MixedB => {
                "[[v,w,x],y,z] - [[v,y,w],x,z] + <[w,v,z],x,y> + [<v,y,w>,x,z] + [v,w,<z,x,y>]"
            }
            KnownIdentity::MixedC => {
                "[[v,w,x],y,z] + [[v,w,z],x,y] - [[x,w,y],v,z] - [[z,w,y],x,v] \
                 + <[w,v,z],x,y> + <[x,w,z],y,v> + <[z,w,y],x,v> + [<w,v,x>,y,z] \
                 + [<w,v,z>,x,y] - [<w,y,v>,x,z] - <<w,v,z>,x,y> + <<w,y,v>,x,z> \
                 + <w,x,<z,y,v>>"
            }
            KnownIdentity::WacSymmetricSum => {
                "{x,y,z} + {x,z,y} + {y,x,z} + {y,z,x} + {z,x,y} + {z,y,x}"
            }
            KnownIdentity::WacDerivation => {
                "{{v,w,x},y,z} + {{v,w,x},z,y} - {{v,y,z},w,x} - {{v,z,y},w,x} \
                 - {v,{w,y,z},x} - {v,{w,z,y},x} - {v,w,{x,y,z}} - {v,w,{x,z,y}}"
            }
        }
    }

    /// Parses the identity over `ops`; every bracket it uses must be present.
    pub fn poly(self, ops: &[OperationSymbol]) -> Result<MultilinearPoly, IdentityError> {
        Ok(parse_poly(self.text(), ops)?)
    }
}

/// The three defining identities of comtrans algebras, over both operations.
pub fn comtrans_relations(ops: &[OperationSymbol]) -> Result<Vec<MultilinearPoly>, IdentityError> {
    [
        KnownIdentity::CommutatorSkew,
        KnownIdentity::TranslatorCyclic,
        KnownIdentity::Comtrans,
    ]
    .iter()
    .map(|k| k.poly(ops))
    .collect()
}

/// The weight-2 identities of one operation: the six consequences of its
/// degree-3 identity followed by its degree-5 generator. `ops` holds the
/// single operation (commutator or translator).
pub fn single_operation_weight2(
    ops: &[OperationSymbol],
) -> Result<Vec<MultilinearPoly>, IdentityError> {
    let (low, high) = single_operation_pair(ops)?;
    let mut out = consequence_set(&[low.poly(ops)?], 2, 1)?;
    out.push(high.poly(ops)?);
    Ok(out)
}

/// Degree-3 and degree-5 generators for a single commutator or translator.
pub fn single_operation_pair(
    ops: &[OperationSymbol],
) -> Result<(KnownIdentity, KnownIdentity), IdentityError> {
    match ops {
        [op] if op.brackets().0 == '[' => Ok((
            KnownIdentity::CommutatorSkew,
            KnownIdentity::CommutatorDegree5,
        )),
        [op] if op.brackets().0 == '<' => Ok((
            KnownIdentity::TranslatorCyclic,
            KnownIdentity::TranslatorDegree5,
        )),
        _ => Err(IdentityError::Unsupported(
            "expected a single commutator or translator".into(),
        )),
    }
}

/// The degree-5 identities that are not consequences of degree 3 in the
/// two-operation setting: the two single-operation generators and the
/// three mixed identities.
pub fn mixed_degree5_generators(
    ops: &[OperationSymbol],
) -> Result<Vec<MultilinearPoly>, IdentityError> {
    [
        KnownIdentity::CommutatorDegree5,
        KnownIdentity::TranslatorDegree5,
        KnownIdentity::MixedA,
        KnownIdentity::MixedB,
        KnownIdentity::MixedC,
    ]
    .iter()
    .map(|k| k.poly(ops))
    .collect()
}

/// All 41 weight-2 identities over both operations: 36 consequences of the
/// degree-3 relations followed by the five degree-5 generators.
pub fn mixed_weight2(ops: &[OperationSymbol]) -> Result<Vec<MultilinearPoly>, IdentityError> {
    let mut out = consequence_set(&comtrans_relations(ops)?, 2, ops.len())?;
    out.extend(mixed_degree5_generators(ops)?);
    Ok(out)
}
