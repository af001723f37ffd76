use crate::symmetric::GroupAlgebraElement;

/// A trilinear operation given by its expansion in an associative triple
/// system. A term c·q of the expansion stands for the word
/// c · a_{q(1)} a_{q(2)} a_{q(3)} in the arguments a_1, a_2, a_3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationSymbol {
    name: String,
    open: char,
    close: char,
    expansion: GroupAlgebraElement,
}

impl OperationSymbol {
    pub fn new(name: &str, open: char, close: char, expansion: GroupAlgebraElement) -> Self {
        assert_eq!(expansion.degree(), 3, "operations are trilinear");
        OperationSymbol {
            name: name.to_string(),
            open,
            close,
            expansion,
        }
    }

    /// [x,y,z] = xyz − yxz
    pub fn commutator() -> Self {
        Self::new(
            "commutator",
            '[',
            ']',
            GroupAlgebraElement::from_int_terms(3, &[(1, &[1, 2, 3]), (-1, &[2, 1, 3])]),
        )
    }

    /// <x,y,z> = xyz − yzx
    pub fn translator() -> Self {
        Self::new(
            "translator",
            '<',
            '>',
            GroupAlgebraElement::from_int_terms(3, &[(1, &[1, 2, 3]), (-1, &[2, 3, 1])]),
        )
    }

    /// The associative triple product itself: (x,y,z) = xyz.
    pub fn associative() -> Self {
        Self::new(
            "associative",
            '(',
            ')',
            GroupAlgebraElement::from_int_terms(3, &[(1, &[1, 2, 3])]),
        )
    }

    /// {x,y,z} = xyz + xzy − 2zyx
    pub fn weakly_anticommutative() -> Self {
        Self::new(
            "weakly-anticommutative",
            '{',
            '}',
            GroupAlgebraElement::from_int_terms(
                3,
                &[(1, &[1, 2, 3]), (1, &[1, 3, 2]), (-2, &[3, 2, 1])],
            ),
        )
    }

    /// The anti-Jordan product deformed at q = 2:
    /// xyz + xzy − yxz + yzx − zxy − zyx.
    pub fn anti_jordan_q2() -> Self {
        Self::new(
            "anti-jordan-q2",
            '(',
            ')',
            GroupAlgebraElement::from_int_terms(
                3,
                &[
                    (1, &[1, 2, 3]),
                    (1, &[1, 3, 2]),
                    (-1, &[2, 1, 3]),
                    (1, &[2, 3, 1]),
                    (-1, &[3, 1, 2]),
                    (-1, &[3, 2, 1]),
                ],
            ),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn brackets(&self) -> (char, char) {
        (self.open, self.close)
    }

    pub fn expansion(&self) -> &GroupAlgebraElement {
        &self.expansion
    }
}

/// The commutator and translator, in that order.
pub fn comtrans_ops() -> Vec<OperationSymbol> {
    vec![OperationSymbol::commutator(), OperationSymbol::translator()]
}
