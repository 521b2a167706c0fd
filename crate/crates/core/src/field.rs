//! Table-driven arithmetic for F2, F3 and F4.
//!
//! Elements are stored as their integer code `0..q`. For F4 the codes are
//! `0 -> 0`, `1 -> 1`, `2 -> w`, `3 -> w^2` with `w^2 = w + 1`; in that
//! encoding F4 addition is XOR of the codes.

use std::fmt;

use crate::error::{Error, Result};

/// A field element, interpreted against a [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn code(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    add: [[u8; 4]; 4],
    mul: [[u8; 4]; 4],
    neg: [u8; 4],
    inv: [u8; 4],
}

static F2: Tables = Tables {
    add: [[0, 1, 0, 0], [1, 0, 0, 0], [0; 4], [0; 4]],
    mul: [[0, 0, 0, 0], [0, 1, 0, 0], [0; 4], [0; 4]],
    neg: [0, 1, 0, 0],
    inv: [0, 1, 0, 0],
};

static F3: Tables = Tables {
    add: [[0, 1, 2, 0], [1, 2, 0, 0], [2, 0, 1, 0], [0; 4]],
    mul: [[0, 0, 0, 0], [0, 1, 2, 0], [0, 2, 1, 0], [0; 4]],
    neg: [0, 2, 1, 0],
    inv: [0, 1, 2, 0],
};

static F4: Tables = Tables {
    add: [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    mul: [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]],
    neg: [0, 1, 2, 3],
    inv: [0, 1, 3, 2],
};

/// One of the three supported finite fields. Immutable and `Copy`; all
/// arithmetic goes through static lookup tables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    q: u8,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.q)
    }
}

impl Field {
    pub const F2: Field = Field { q: 2 };
    pub const F3: Field = Field { q: 3 };
    pub const F4: Field = Field { q: 4 };

    pub fn new(q: u32) -> Result<Field> {
        match q {
            2 => Ok(Field::F2),
            3 => Ok(Field::F3),
            4 => Ok(Field::F4),
            other => Err(Error::UnsupportedField(other)),
        }
    }

    #[inline]
    pub fn q(self) -> u8 {
        self.q
    }

    #[inline]
    fn tables(self) -> &'static Tables {
        match self.q {
            2 => &F2,
            3 => &F3,
            _ => &F4,
        }
    }

    /// True when `-1 = 1`, i.e. circulant and negacirculant coincide.
    #[inline]
    pub fn is_char2(self) -> bool {
        self.q != 3
    }

    #[inline]
    pub fn add(self, x: Elem, y: Elem) -> Elem {
        Elem(self.tables().add[x.0 as usize][y.0 as usize])
    }

    #[inline]
    pub fn sub(self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(self, x: Elem, y: Elem) -> Elem {
        Elem(self.tables().mul[x.0 as usize][y.0 as usize])
    }

    #[inline]
    pub fn neg(self, x: Elem) -> Elem {
        Elem(self.tables().neg[x.0 as usize])
    }

    pub fn inv(self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero(self.q));
        }
        Ok(Elem(self.tables().inv[x.0 as usize]))
    }

    /// `-1` in this field.
    #[inline]
    pub fn minus_one(self) -> Elem {
        self.neg(Elem::ONE)
    }

    /// The Frobenius map `x -> x^2` on F4, identity on prime fields.
    #[inline]
    pub fn frobenius(self, x: Elem) -> Elem {
        if self.q == 4 {
            self.mul(x, x)
        } else {
            x
        }
    }

    pub fn elements(self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q).map(Elem)
    }

    pub fn nonzero(self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.q).map(Elem)
    }

    pub fn elem(self, code: u8) -> Result<Elem> {
        if code < self.q {
            Ok(Elem(code))
        } else {
            Err(Error::ParseElement {
                token: code.to_string(),
                q: self.q,
            })
        }
    }

    pub fn parse_element(self, token: &str) -> Result<Elem> {
        let t = token.trim();
        let code = match (self.q, t) {
            (_, "0") => Some(0),
            (_, "1") => Some(1),
            (3, "2") => Some(2),
            (4, "w") | (4, "ω") => Some(2),
            (4, "v") | (4, "ω²") | (4, "w^2") => Some(3),
            _ => None,
        };
        code.map(Elem).ok_or_else(|| Error::ParseElement {
            token: t.to_string(),
            q: self.q,
        })
    }

    pub fn render_element(self, x: Elem) -> &'static str {
        match (self.q, x.0) {
            (_, 0) => "0",
            (_, 1) => "1",
            (3, 2) => "2",
            (4, 2) => "w",
            (4, 3) => "v",
            _ => "?",
        }
    }

    /// Parses `"(1,w,0,v)"`. The parentheses are optional; `"()"` is the
    /// empty vector.
    pub fn parse_elements(self, text: &str) -> Result<Vec<Elem>> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Vec::new());
        }
        inner.split(',').map(|tok| self.parse_element(tok)).collect()
    }

    pub fn render_elements(self, xs: &[Elem]) -> String {
        let mut s = String::with_capacity(2 * xs.len() + 2);
        s.push('(');
        for (i, &x) in xs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(self.render_element(x));
        }
        s.push(')');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIELDS: [Field; 3] = [Field::F2, Field::F3, Field::F4];

    /// F4 as GF(2)[x]/(x^2 + x + 1): element `c0 + c1 x` has bits (c1 c0).
    /// Code 2 = x = w, code 3 = x + 1 = w^2.
    fn poly_mul_f4(a: u8, b: u8) -> u8 {
        let mut prod = 0u8;
        for i in 0..2 {
            if b >> i & 1 == 1 {
                prod ^= a << i;
            }
        }
        if prod & 0b100 != 0 {
            prod ^= 0b111;
        }
        prod
    }

    #[test]
    fn f4_tables_match_polynomial_model() {
        let f = Field::F4;
        for a in 0..4u8 {
            for b in 0..4u8 {
                assert_eq!(f.add(Elem(a), Elem(b)).0, a ^ b);
                assert_eq!(f.mul(Elem(a), Elem(b)).0, poly_mul_f4(a, b), "{a}*{b}");
            }
        }
    }

    #[test]
    fn prime_field_tables_match_modular_arithmetic() {
        for f in [Field::F2, Field::F3] {
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.neg(Elem(a)).0, (q - a) % q);
                for b in 0..q {
                    assert_eq!(f.add(Elem(a), Elem(b)).0, (a + b) % q);
                    assert_eq!(f.mul(Elem(a), Elem(b)).0, (a * b) % q);
                }
            }
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(Field::F2.add(Elem(1), Elem(1)), Elem(0));
        assert_eq!(Field::F3.add(Elem(2), Elem(2)), Elem(1));
        // w + w^2 = 1
        assert_eq!(Field::F4.add(Elem(2), Elem(3)), Elem(1));
        // w * w = w^2
        assert_eq!(Field::F4.mul(Elem(2), Elem(2)), Elem(3));
        assert_eq!(Field::F3.mul(Elem(2), Elem(2)), Elem(1));
        assert_eq!(Field::F3.neg(Elem(1)), Elem(2));
        assert_eq!(Field::F2.neg(Elem(1)), Elem(1));
        assert_eq!(Field::F4.inv(Elem(2)).unwrap(), Elem(3));
        for f in FIELDS {
            for x in f.elements() {
                assert_eq!(f.mul(x, Elem::ZERO), Elem::ZERO);
            }
        }
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        for f in FIELDS {
            assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero(f.q())));
        }
    }

    #[test]
    fn unsupported_orders_rejected() {
        for q in [0, 1, 5, 7, 8, 9] {
            assert_eq!(Field::new(q), Err(Error::UnsupportedField(q)));
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in FIELDS {
            for x in f.elements() {
                assert_eq!(f.add(x, Elem::ZERO), x);
                assert_eq!(f.mul(x, Elem::ONE), x);
                assert_eq!(f.add(f.neg(x), x), Elem::ZERO);
                if !x.is_zero() {
                    assert_eq!(f.mul(f.inv(x).unwrap(), x), Elem::ONE);
                }
                for y in f.elements() {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in f.elements() {
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for f in FIELDS {
            let order = f.q() as usize - 1;
            let generator = f.nonzero().find(|&g| {
                let mut seen = std::collections::HashSet::new();
                let mut p = Elem::ONE;
                for _ in 0..order {
                    p = f.mul(p, g);
                    seen.insert(p);
                }
                seen.len() == order
            });
            assert!(generator.is_some(), "{f:?}");
        }
    }

    #[test]
    fn frobenius_is_additive_on_f4() {
        let f = Field::F4;
        for x in f.elements() {
            for y in f.elements() {
                let lhs = f.frobenius(f.add(x, y));
                let rhs = f.add(f.frobenius(x), f.frobenius(y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn parse_and_render() {
        let f4 = Field::F4;
        assert_eq!(f4.parse_element("w").unwrap(), Elem(2));
        assert_eq!(f4.render_element(Elem(3)), "v");
        assert_eq!(Field::F3.parse_element("2").unwrap(), Elem(2));
        for f in FIELDS {
            for x in f.elements() {
                assert_eq!(f.parse_element(f.render_element(x)).unwrap(), x);
            }
        }
        let err = Field::F2.parse_element("2").unwrap_err();
        assert_eq!(
            err,
            Error::ParseElement {
                token: "2".into(),
                q: 2
            }
        );
        assert!(err.to_string().contains("\"2\"") && err.to_string().contains("F2"));
        let v = f4.parse_elements("(1,w,0,v)").unwrap();
        assert_eq!(v, vec![Elem(1), Elem(2), Elem(0), Elem(3)]);
        assert_eq!(f4.render_elements(&v), "(1,w,0,v)");
        assert_eq!(f4.parse_elements("()").unwrap(), vec![]);
    }
}
