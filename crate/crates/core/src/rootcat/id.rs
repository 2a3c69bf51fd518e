use super::CatalogError;
use crate::exactmath::{fmt_q, parse_q, Q};
use num_traits::{One, Zero};
use std::fmt;

/// Which simple component of the even part carries the highest root, for the
/// two exceptional superalgebras that admit two inequivalent choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum F4Theta {
    /// Root of the `sl(2)` summand; `g♮ = so(7)`.
    Sl2,
    /// Root of the `so(7)` summand; `g♮ = D(2,1;2)`.
    D212,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum G3Theta {
    /// Root of the `sl(2)` summand; `g♮ = G2`.
    Sl2,
    /// Long root of the `G2` summand; `g♮ = osp(3|2)`.
    G2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    G2,
    F4,
    E6,
    E7,
    E8,
}

/// A pair (g, θ) from the catalog.
///
/// Simple Lie algebras of classical type are the `n = 0` members of the super
/// families: `sl(m) = sl(m|0)`, `so(m) = osp(m|0)`, `sp(n) = spo(n|0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    /// `sl(m|n)`, θ in `sl(m)`.
    Sl {
        m: usize,
        n: usize,
    },
    /// `psl(m|m)`.
    Psl {
        m: usize,
    },
    /// `osp(m|n)`, θ in `so(m)`; `n` even.
    Osp {
        m: usize,
        n: usize,
    },
    /// `spo(n|m)`, θ in `sp(n)`; `n` even.
    Spo {
        n: usize,
        m: usize,
    },
    D21a {
        a: Q,
    },
    F4Super(F4Theta),
    G3Super(G3Theta),
    Exceptional(Exceptional),
}

impl AlgebraId {
    pub fn sl(m: usize) -> Self {
        AlgebraId::Sl { m, n: 0 }
    }
    pub fn so(m: usize) -> Self {
        AlgebraId::Osp { m, n: 0 }
    }
    pub fn sp(n: usize) -> Self {
        AlgebraId::Spo { n, m: 0 }
    }

    /// True for ordinary (non-super) Lie algebras.
    pub fn is_lie(&self) -> bool {
        match self {
            AlgebraId::Sl { n, .. } | AlgebraId::Osp { n, .. } => *n == 0,
            AlgebraId::Spo { m, .. } => *m == 0,
            AlgebraId::Exceptional(_) => true,
            _ => false,
        }
    }

    /// Checks the parameter constraints. `sl(3|1)` is accepted here so that its
    /// structure can be computed, but it is rejected by level classification
    /// because its `g♮ = gl(1|1)` is not a sum of minimal ideals.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let inv = |reason: &str| {
            Err(CatalogError::InvalidParameter {
                id: self.to_string(),
                reason: reason.to_string(),
            })
        };
        let excl = |reason: &str| {
            Err(CatalogError::ExcludedAlgebra {
                id: self.to_string(),
                reason: reason.to_string(),
            })
        };
        match self {
            AlgebraId::Sl { m, n } => {
                if *m < 2 {
                    return inv("the sl(m) summand carrying θ needs m ≥ 2");
                }
                if m == n {
                    return inv("sl(m|m) is not simple; use psl(m|m)");
                }
                if *n == 0 && *m == 2 {
                    return excl("sl(2) has empty g_{±1/2}; its W-algebra is Virasoro");
                }
                if *n >= 2 && *m == n + 2 {
                    return excl("g♮ = gl(n|n) is not a direct sum of its minimal ideals");
                }
                Ok(())
            }
            AlgebraId::Psl { m } => {
                if *m < 2 {
                    return inv("psl(m|m) needs m ≥ 2");
                }
                Ok(())
            }
            AlgebraId::Osp { m, n } => {
                if n % 2 == 1 {
                    return inv("the symplectic size must be even");
                }
                if *n == 0 {
                    match m {
                        0..=2 => inv("so(m) needs m ≥ 3"),
                        3 => excl("so(3) ≅ sl(2)"),
                        4 => inv("so(4) is not simple"),
                        _ => Ok(()),
                    }
                } else if *m < 4 {
                    inv("θ in so(m) needs m ≥ 4")
                } else {
                    Ok(())
                }
            }
            AlgebraId::Spo { n, m } => {
                if n % 2 == 1 || *n < 2 {
                    return inv("the symplectic size must be even and positive");
                }
                if *n == 2 && *m == 0 {
                    return excl("sp(2) ≅ sl(2)");
                }
                Ok(())
            }
            AlgebraId::D21a { a } => {
                if a.is_zero() || *a == -Q::one() {
                    return inv("D(2,1;a) needs a ∉ {0, -1}");
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Parses the textual form used on the command line and in data files.
    pub fn parse(s: &str) -> Result<Self, CatalogError> {
        let t = s.trim();
        let perr = |token: &str, reason: &str| CatalogError::Parse {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        if t.is_empty() {
            return Err(perr(s, "empty algebra name"));
        }
        if let Some(rest) = t.strip_prefix("D(2,1;") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| perr(t, "missing closing ')'"))?;
            let a =
                parse_q(inner).map_err(|_| perr(inner, "parameter a must be a rational p/q"))?;
            return Ok(AlgebraId::D21a { a });
        }
        if let Some((base, choice)) = t.split_once(':') {
            let (base, choice) = (base.trim(), choice.trim());
            return match base {
                "F(4)" => match choice {
                    "sl2" => Ok(AlgebraId::F4Super(F4Theta::Sl2)),
                    "D212" => Ok(AlgebraId::F4Super(F4Theta::D212)),
                    _ => Err(perr(choice, "θ choice for F(4) must be sl2 or D212")),
                },
                "G(3)" => match choice {
                    "sl2" => Ok(AlgebraId::G3Super(G3Theta::Sl2)),
                    "G2" => Ok(AlgebraId::G3Super(G3Theta::G2)),
                    _ => Err(perr(choice, "θ choice for G(3) must be sl2 or G2")),
                },
                _ => Err(perr(base, "only F(4) and G(3) take a θ choice")),
            };
        }
        match t {
            "G2" => return Ok(AlgebraId::Exceptional(Exceptional::G2)),
            "F4" => return Ok(AlgebraId::Exceptional(Exceptional::F4)),
            "E6" => return Ok(AlgebraId::Exceptional(Exceptional::E6)),
            "E7" => return Ok(AlgebraId::Exceptional(Exceptional::E7)),
            "E8" => return Ok(AlgebraId::Exceptional(Exceptional::E8)),
            "F(4)" | "G(3)" => return Err(perr(t, "θ choice required, e.g. F(4):sl2")),
            _ => {}
        }
        let open = t.find('(').ok_or_else(|| perr(t, "unknown algebra name"))?;
        let name = &t[..open];
        let inner = t[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| perr(&t[open..], "missing closing ')'"))?;
        let mut nums = Vec::new();
        for part in inner.split('|') {
            let p = part.trim();
            nums.push(
                p.parse::<usize>()
                    .map_err(|_| perr(p, "expected a non-negative integer"))?,
            );
        }
        let arity = |want: &[usize]| {
            if want.contains(&nums.len()) {
                Ok(())
            } else {
                Err(perr(inner, "wrong number of '|'-separated sizes"))
            }
        };
        match name {
            "sl" => {
                arity(&[1, 2])?;
                Ok(AlgebraId::Sl {
                    m: nums[0],
                    n: *nums.get(1).unwrap_or(&0),
                })
            }
            "psl" => {
                arity(&[2])?;
                if nums[0] != nums[1] {
                    return Err(perr(inner, "psl needs equal sizes m|m"));
                }
                Ok(AlgebraId::Psl { m: nums[0] })
            }
            "osp" => {
                arity(&[2])?;
                Ok(AlgebraId::Osp {
                    m: nums[0],
                    n: nums[1],
                })
            }
            "spo" => {
                arity(&[2])?;
                Ok(AlgebraId::Spo {
                    n: nums[0],
                    m: nums[1],
                })
            }
            "so" => {
                arity(&[1])?;
                Ok(AlgebraId::so(nums[0]))
            }
            "sp" => {
                arity(&[1])?;
                Ok(AlgebraId::sp(nums[0]))
            }
            _ => Err(perr(name, "unknown algebra family")),
        }
    }

    /// Parse then validate.
    pub fn parse_valid(s: &str) -> Result<Self, CatalogError> {
        let id = Self::parse(s)?;
        id.validate()?;
        Ok(id)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::Sl { m, n: 0 } => write!(f, "sl({m})"),
            AlgebraId::Sl { m, n } => write!(f, "sl({m}|{n})"),
            AlgebraId::Psl { m } => write!(f, "psl({m}|{m})"),
            AlgebraId::Osp { m, n: 0 } => write!(f, "so({m})"),
            AlgebraId::Osp { m, n } => write!(f, "osp({m}|{n})"),
            AlgebraId::Spo { n, m: 0 } => write!(f, "sp({n})"),
            AlgebraId::Spo { n, m } => write!(f, "spo({n}|{m})"),
            AlgebraId::D21a { a } => write!(f, "D(2,1;{})", fmt_q(a)),
            AlgebraId::F4Super(F4Theta::Sl2) => write!(f, "F(4):sl2"),
            AlgebraId::F4Super(F4Theta::D212) => write!(f, "F(4):D212"),
            AlgebraId::G3Super(G3Theta::Sl2) => write!(f, "G(3):sl2"),
            AlgebraId::G3Super(G3Theta::G2) => write!(f, "G(3):G2"),
            AlgebraId::Exceptional(e) => write!(f, "{e:?}"),
        }
    }
}

/// The six values of `a` giving isomorphic `D(2,1;a)`.
pub fn d21a_orbit(a: &Q) -> Vec<Q> {
    let one = Q::one();
    let b = -(&one + a);
    let mut v = vec![
        a.clone(),
        a.recip(),
        b.clone(),
        b.recip(),
        -(a / (&one + a)),
        -((&one + a) / a),
    ];
    v.sort();
    v.dedup();
    v
}

/// Largest member of the isomorphism orbit of `a`.
pub fn d21a_canonical(a: &Q) -> Q {
    d21a_orbit(a).pop().expect("nonempty orbit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::q;

    #[test]
    fn roundtrip_names() {
        for s in [
            "sl(4)",
            "sl(4|1)",
            "psl(3|3)",
            "osp(5|2)",
            "spo(6|2)",
            "D(2,1;3/2)",
            "F4",
            "E8",
            "F(4):sl2",
            "F(4):D212",
            "G(3):sl2",
            "G(3):G2",
            "so(7)",
            "sp(4)",
        ] {
            assert_eq!(AlgebraId::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn parse_errors_name_the_token() {
        let e = AlgebraId::parse("sl(4|x)").unwrap_err();
        assert!(matches!(e, CatalogError::Parse { ref token, .. } if token == "x"));
        let e = AlgebraId::parse("foo(3)").unwrap_err();
        assert!(matches!(e, CatalogError::Parse { ref token, .. } if token == "foo"));
        let e = AlgebraId::parse("F(4):E6").unwrap_err();
        assert!(matches!(e, CatalogError::Parse { ref token, .. } if token == "E6"));
        let e = AlgebraId::parse("D(2,1;z)").unwrap_err();
        assert!(matches!(e, CatalogError::Parse { ref token, .. } if token == "z"));
    }

    #[test]
    fn exclusions() {
        assert!(matches!(
            AlgebraId::parse_valid("sl(4|2)"),
            Err(CatalogError::ExcludedAlgebra { .. })
        ));
        assert!(matches!(
            AlgebraId::parse_valid("sl(2)"),
            Err(CatalogError::ExcludedAlgebra { .. })
        ));
        assert!(matches!(
            AlgebraId::parse_valid("D(2,1;-1)"),
            Err(CatalogError::InvalidParameter { .. })
        ));
        assert!(AlgebraId::parse_valid("sl(3|1)").is_ok());
    }

    #[test]
    fn orbit_of_two() {
        assert_eq!(d21a_orbit(&q(2, 1)).len(), 6);
        assert_eq!(d21a_canonical(&q(-3, 2)), q(2, 1));
        assert_eq!(d21a_canonical(&q(1, 1)), q(1, 1));
    }
}
