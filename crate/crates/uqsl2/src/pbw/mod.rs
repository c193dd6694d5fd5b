//! Elements of the algebra in two PBW bases, exact multiplication, the star
//! involution, the filtration degree, and the change of variables to the
//! generators `x, y, z, a, b` that survive at `q = 1`.

mod basis1;
mod basis2;
mod oracle;

pub use basis1::{
    commutator, degree1, left_mul, left_mul_xyz, multiply1, star1, theta_exchange, Pbw1Element,
    Pbw1Monomial, ThetaExchange,
};
pub use basis2::{multiply2, to_basis1, to_basis2, Pbw2Element, Pbw2Monomial};
pub use oracle::OracleModule;

use thiserror::Error;

use crate::scalars::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("the zero element has no filtration degree")]
    ZeroElement,
}

/// Generators: `theta, X, Y, Z` and `x = (X-1)/(q-q^-1)`, `y = (Y-1)/(q-q^-1)`,
/// `z = Z/(q-q^-1)`, `a = y - x`, `b = -xy - q^2 z^2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Gen {
    Theta,
    X,
    Y,
    Z,
    SmallX,
    SmallY,
    SmallZ,
    A,
    B,
}

impl Gen {
    pub const ALL: [Gen; 9] = [
        Gen::Theta,
        Gen::X,
        Gen::Y,
        Gen::Z,
        Gen::SmallX,
        Gen::SmallY,
        Gen::SmallZ,
        Gen::A,
        Gen::B,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Gen::Theta => "theta",
            Gen::X => "X",
            Gen::Y => "Y",
            Gen::Z => "Z",
            Gen::SmallX => "x",
            Gen::SmallY => "y",
            Gen::SmallZ => "z",
            Gen::A => "a",
            Gen::B => "b",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.symbol() == s)
    }
}

/// `scalar * letters[0] * letters[1] * ...`
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenWord {
    pub scalar: RatFunc,
    pub letters: Vec<Gen>,
}

impl GenWord {
    pub fn new(scalar: RatFunc, letters: Vec<Gen>) -> Self {
        GenWord { scalar, letters }
    }

    pub fn letters(letters: &[Gen]) -> Self {
        GenWord {
            scalar: RatFunc::one(),
            letters: letters.to_vec(),
        }
    }
}

pub fn normal_form1(w: &GenWord) -> Pbw1Element {
    basis1::normal_form_word(&w.scalar, &w.letters)
}

pub fn normal_form2(w: &GenWord) -> Pbw2Element {
    to_basis2(&normal_form1(w))
}

pub fn independence_oracle(w: &GenWord) -> Pbw2Element {
    OracleModule::new().apply_word(&w.scalar, &w.letters)
}

/// True iff every second-basis coefficient is free of poles on `(0, inf)`.
pub fn a_membership(e: &Pbw1Element) -> bool {
    to_basis2(e)
        .terms()
        .values()
        .all(|c| c.pole_free_on_positive_axis())
}

pub fn a_membership2(e: &Pbw2Element) -> bool {
    e.terms().values().all(|c| c.pole_free_on_positive_axis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{qint, GaussRat};

    fn q(k: i64) -> RatFunc {
        RatFunc::q_pow(k)
    }

    /// Each relation of the presentation in x, y, z, theta as a list of words.
    fn aform_relations() -> Vec<Vec<(RatFunc, Vec<Gen>)>> {
        use Gen::{SmallX as X, SmallY as Y, SmallZ as Z, Theta as T};
        let one = RatFunc::one;
        let two = qint(2);
        vec![
            vec![
                (q(1), vec![X, T]),
                (-q(-1), vec![T, X]),
                (-two.clone(), vec![Z]),
                (one(), vec![T]),
            ],
            vec![
                (q(1), vec![T, Y]),
                (-q(-1), vec![Y, T]),
                (-two, vec![Z]),
                (one(), vec![T]),
            ],
            vec![
                (one(), vec![T, Z]),
                (-one(), vec![Z, T]),
                (-one(), vec![Y]),
                (one(), vec![X]),
            ],
            vec![(q(1), vec![Z, X]), (-q(-1), vec![X, Z]), (one(), vec![Z])],
            vec![(q(1), vec![Y, Z]), (-q(-1), vec![Z, Y]), (one(), vec![Z])],
            vec![
                (one(), vec![X, Y]),
                (q(2), vec![Z, Z]),
                (-one(), vec![Y, X]),
                (-q(-2), vec![Z, Z]),
            ],
            vec![
                (one(), vec![X]),
                (one(), vec![Y]),
                (RatFunc::delta(), vec![X, Y]),
                (&RatFunc::delta() * &q(2), vec![Z, Z]),
            ],
        ]
    }

    #[test]
    fn aform_relations_vanish_in_second_basis() {
        for rel in aform_relations() {
            let mut acc = Pbw2Element::zero();
            for (c, w) in rel {
                acc.add_scaled(&normal_form2(&GenWord::letters(&w)), &c);
            }
            assert!(acc.is_zero(), "relation residual {acc}");
        }
    }

    #[test]
    fn oracle_agrees_on_short_words() {
        let letters = [
            Gen::Theta,
            Gen::SmallX,
            Gen::SmallY,
            Gen::SmallZ,
            Gen::A,
            Gen::B,
        ];
        let mut oracle = OracleModule::new();
        for a in letters {
            for b in letters {
                for c in letters {
                    let w = [a, b, c];
                    let lhs = normal_form2(&GenWord::letters(&w));
                    let rhs = oracle.apply_word(&RatFunc::one(), &w);
                    assert_eq!(lhs, rhs, "word {w:?}");
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(a_membership(&Pbw1Element::generator(Gen::SmallX)));
        assert!(a_membership(&Pbw1Element::generator(Gen::X)));
        assert!(!a_membership(&Pbw1Element::scalar(
            RatFunc::delta().inv().unwrap()
        )));
        let half = RatFunc::from_gauss(GaussRat::from_frac(1, 2));
        assert!(a_membership(&Pbw1Element::scalar(half)));
    }

    #[test]
    fn change_of_variables() {
        let x = normal_form2(&GenWord::letters(&[Gen::X]));
        let mut expect = to_basis2(&Pbw1Element::one());
        expect.add_scaled(
            &to_basis2(&Pbw1Element::generator(Gen::SmallX)),
            &RatFunc::delta(),
        );
        assert_eq!(x, expect);
        assert_eq!(
            to_basis2(&Pbw1Element::one()),
            Pbw2Element::basis(0, 0, 0, 0)
        );
    }
}
