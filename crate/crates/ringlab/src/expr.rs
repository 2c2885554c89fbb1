//! The construction expression language.
//!
//! Grammar (EBNF):
//!
//! ```text
//! ring  := "Zmod(" int ")" | "F2"
//!        | "M(" int "," ring ")" | "T(" int "," ring ")"
//!        | "product(" ring {"," ring} ")"
//!        | "trivext(" ring ")" | "polyq(" ring "," int ")"
//!        | "groupring(" ring "," group ")"
//!        | "corner(" ring "," int ")"
//!        | "quot(" ring "," "ideal(" int {"," int} ")" ")"
//!        | "A(" int "," int "," ring ")" | "B(" int "," int "," ring ")"
//!        | "C(" int "," ring ")"
//!        | "S(" int "," int "," ring ")" | "Tnm(" int "," int "," ring ")"
//!        | "U(" int "," ring ")"
//! group := "C(" int ")" | "prod(" group "," group ")" | "D4" | "Q8"
//! ```
//!
//! The language is deliberately closed; raw tables enter through the JSON
//! import instead. `F2` is sugar for `Zmod(2)` but prints back as `F2`, so
//! parse/print round-trips on ASTs.

use crate::config::Config;
use crate::construct;
use crate::ring::{FiniteRing, RingError, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    F2,
    Zmod(u64),
    Matrix(u32, Box<RingExpr>),
    UpperTriangular(u32, Box<RingExpr>),
    Product(Vec<RingExpr>),
    TrivExt(Box<RingExpr>),
    PolyQ(Box<RingExpr>, u32),
    GroupRing(Box<RingExpr>, GroupExpr),
    Corner(Box<RingExpr>, u64),
    Quot(Box<RingExpr>, Vec<u64>),
    APair(u32, u32, Box<RingExpr>),
    BPair(u32, u32, Box<RingExpr>),
    CAlt(u32, Box<RingExpr>),
    SGrid(u32, u32, Box<RingExpr>),
    TPair(u32, u32, Box<RingExpr>),
    UAlt(u32, Box<RingExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(u64),
    Prod(Box<GroupExpr>, Box<GroupExpr>),
    D4,
    Q8,
}

/// Parse failure with a byte offset into the input.
#[derive(Debug, Clone, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Either a parse failure or a construction failure during evaluation.
#[derive(Debug, thiserror::Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("evaluation failed: {0}")]
    Eval(#[from] RingError),
}

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    Comma,
}

struct Lexer {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

fn lex(input: &str) -> Result<Lexer, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                tokens.push((Token::LParen, i));
                i += 1;
            }
            b')' => {
                tokens.push((Token::RParen, i));
                i += 1;
            }
            b',' => {
                tokens.push((Token::Comma, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                let mut value: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u64))
                        .ok_or_else(|| ParseError {
                            position: start,
                            message: "integer literal overflows".into(),
                        })?;
                    i += 1;
                }
                tokens.push((Token::Int(value), start));
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((
                    Token::Ident(std::str::from_utf8(&bytes[start..i]).unwrap().to_string()),
                    start,
                ));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character {:?}", b as char),
                })
            }
        }
    }
    Ok(Lexer {
        tokens,
        pos: 0,
        end: input.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let position = self.here();
        match self.next() {
            Some(t) if t == want => Ok(()),
            got => Err(ParseError {
                position,
                message: format!("expected {what}, found {}", describe(got.as_ref())),
            }),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<u64, ParseError> {
        let position = self.here();
        match self.next() {
            Some(Token::Int(v)) => Ok(v),
            got => Err(ParseError {
                position,
                message: format!("expected {what}, found {}", describe(got.as_ref())),
            }),
        }
    }
}

fn describe(t: Option<&Token>) -> String {
    match t {
        None => "end of input".to_string(),
        Some(Token::Ident(s)) => format!("identifier {s:?}"),
        Some(Token::Int(v)) => format!("integer {v}"),
        Some(Token::LParen) => "'('".to_string(),
        Some(Token::RParen) => "')'".to_string(),
        Some(Token::Comma) => "','".to_string(),
    }
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

/// Nesting bound: recursive descent must not turn hostile input into a stack
/// overflow. Far deeper than any constructible ring.
const MAX_NESTING: usize = 64;

/// Parse a ring expression; the entire input must be consumed.
pub fn parse(input: &str) -> Result<RingExpr, ParseError> {
    let mut lx = lex(input)?;
    let expr = parse_ring(&mut lx, 0)?;
    if lx.peek().is_some() {
        return Err(ParseError {
            position: lx.here(),
            message: "trailing input after expression".into(),
        });
    }
    Ok(expr)
}

fn too_deep(lx: &Lexer) -> ParseError {
    ParseError {
        position: lx.here(),
        message: format!("expression nesting exceeds {MAX_NESTING} levels"),
    }
}

fn parse_ring(lx: &mut Lexer, depth: usize) -> Result<RingExpr, ParseError> {
    if depth > MAX_NESTING {
        return Err(too_deep(lx));
    }
    let position = lx.here();
    let name = match lx.next() {
        Some(Token::Ident(s)) => s,
        got => {
            return Err(ParseError {
                position,
                message: format!(
                    "expected a ring constructor, found {}",
                    describe(got.as_ref())
                ),
            })
        }
    };
    match name.as_str() {
        "F2" => Ok(RingExpr::F2),
        "Zmod" => {
            lx.expect(Token::LParen, "'('")?;
            let n = lx.expect_int("a modulus")?;
            lx.expect(Token::RParen, "')'")?;
            Ok(RingExpr::Zmod(n))
        }
        "M" | "T" => {
            lx.expect(Token::LParen, "'('")?;
            let n = int_u32(lx)?;
            lx.expect(Token::Comma, "','")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::RParen, "')'")?;
            Ok(if name == "M" {
                RingExpr::Matrix(n, Box::new(inner))
            } else {
                RingExpr::UpperTriangular(n, Box::new(inner))
            })
        }
        "product" => {
            lx.expect(Token::LParen, "'('")?;
            let mut factors = vec![parse_ring(lx, depth + 1)?];
            while lx.peek() == Some(&Token::Comma) {
                lx.next();
                factors.push(parse_ring(lx, depth + 1)?);
            }
            lx.expect(Token::RParen, "')'")?;
            Ok(RingExpr::Product(factors))
        }
        "trivext" => {
            lx.expect(Token::LParen, "'('")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::RParen, "')'")?;
            Ok(RingExpr::TrivExt(Box::new(inner)))
        }
        "polyq" => {
            lx.expect(Token::LParen, "'('")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::Comma, "','")?;
            let n = int_u32(lx)?;
            lx.expect(Token::RParen, "')'")?;
            Ok(RingExpr::PolyQ(Box::new(inner), n))
        }
        "groupring" => {
            lx.expect(Token::LParen, "'('")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::Comma, "','")?;
            let g = parse_group(lx, depth + 1)?;
            lx.expect(Token::RParen, "')'")?;
            Ok(RingExpr::GroupRing(Box::new(inner), g))
        }
        "corner" => {
            lx.expect(Token::LParen, "'('")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::Comma, "','")?;
            let e = lx.expect_int("an idempotent index")?;
            lx.expect(Token::RParen, "')'")?;
            Ok(RingExpr::Corner(Box::new(inner), e))
        }
        "quot" => {
            lx.expect(Token::LParen, "'('")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::Comma, "','")?;
            let position = lx.here();
            match lx.next() {
                Some(Token::Ident(s)) if s == "ideal" => {}
                got => {
                    return Err(ParseError {
                        position,
                        message: format!("expected 'ideal', found {}", describe(got.as_ref())),
                    })
                }
            }
            lx.expect(Token::LParen, "'('")?;
            let mut gens = vec![lx.expect_int("an ideal generator")?];
            while lx.peek() == Some(&Token::Comma) {
                lx.next();
                gens.push(lx.expect_int("an ideal generator")?);
            }
            lx.expect(Token::RParen, "')'")?;
            lx.expect(Token::RParen, "')'")?;
            Ok(RingExpr::Quot(Box::new(inner), gens))
        }
        "A" | "B" | "S" | "Tnm" => {
            lx.expect(Token::LParen, "'('")?;
            let n = int_u32(lx)?;
            lx.expect(Token::Comma, "','")?;
            let m = int_u32(lx)?;
            lx.expect(Token::Comma, "','")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::RParen, "')'")?;
            let b = Box::new(inner);
            Ok(match name.as_str() {
                "A" => RingExpr::APair(n, m, b),
                "B" => RingExpr::BPair(n, m, b),
                "S" => RingExpr::SGrid(n, m, b),
                _ => RingExpr::TPair(n, m, b),
            })
        }
        "C" | "U" => {
            lx.expect(Token::LParen, "'('")?;
            let n = int_u32(lx)?;
            lx.expect(Token::Comma, "','")?;
            let inner = parse_ring(lx, depth + 1)?;
            lx.expect(Token::RParen, "')'")?;
            Ok(if name == "C" {
                RingExpr::CAlt(n, Box::new(inner))
            } else {
                RingExpr::UAlt(n, Box::new(inner))
            })
        }
        other => Err(ParseError {
            position,
            message: format!("unknown ring constructor {other:?}"),
        }),
    }
}

fn parse_group(lx: &mut Lexer, depth: usize) -> Result<GroupExpr, ParseError> {
    if depth > MAX_NESTING {
        return Err(too_deep(lx));
    }
    let position = lx.here();
    let name = match lx.next() {
        Some(Token::Ident(s)) => s,
        got => {
            return Err(ParseError {
                position,
                message: format!(
                    "expected a group constructor, found {}",
                    describe(got.as_ref())
                ),
            })
        }
    };
    match name.as_str() {
        "C" => {
            lx.expect(Token::LParen, "'('")?;
            let n = lx.expect_int("a group order")?;
            lx.expect(Token::RParen, "')'")?;
            Ok(GroupExpr::Cyclic(n))
        }
        "prod" => {
            lx.expect(Token::LParen, "'('")?;
            let g = parse_group(lx, depth + 1)?;
            lx.expect(Token::Comma, "','")?;
            let h = parse_group(lx, depth + 1)?;
            lx.expect(Token::RParen, "')'")?;
            Ok(GroupExpr::Prod(Box::new(g), Box::new(h)))
        }
        "D4" => Ok(GroupExpr::D4),
        "Q8" => Ok(GroupExpr::Q8),
        other => Err(ParseError {
            position,
            message: format!("unknown group constructor {other:?}"),
        }),
    }
}

fn int_u32(lx: &mut Lexer) -> Result<u32, ParseError> {
    let position = lx.here();
    let v = lx.expect_int("an integer")?;
    u32::try_from(v).map_err(|_| ParseError {
        position,
        message: format!("integer {v} too large"),
    })
}

// ---------------------------------------------------------------------------
// printer
// ---------------------------------------------------------------------------

/// Canonical text form; `parse(print(e)) == e` for every AST.
pub fn print(expr: &RingExpr) -> String {
    match expr {
        RingExpr::F2 => "F2".to_string(),
        RingExpr::Zmod(n) => format!("Zmod({n})"),
        RingExpr::Matrix(n, r) => format!("M({n}, {})", print(r)),
        RingExpr::UpperTriangular(n, r) => format!("T({n}, {})", print(r)),
        RingExpr::Product(rs) => format!(
            "product({})",
            rs.iter().map(print).collect::<Vec<_>>().join(", ")
        ),
        RingExpr::TrivExt(r) => format!("trivext({})", print(r)),
        RingExpr::PolyQ(r, n) => format!("polyq({}, {n})", print(r)),
        RingExpr::GroupRing(r, g) => format!("groupring({}, {})", print(r), print_group(g)),
        RingExpr::Corner(r, e) => format!("corner({}, {e})", print(r)),
        RingExpr::Quot(r, gens) => format!(
            "quot({}, ideal({}))",
            print(r),
            gens.iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        RingExpr::APair(n, m, r) => format!("A({n}, {m}, {})", print(r)),
        RingExpr::BPair(n, m, r) => format!("B({n}, {m}, {})", print(r)),
        RingExpr::CAlt(n, r) => format!("C({n}, {})", print(r)),
        RingExpr::SGrid(n, m, r) => format!("S({n}, {m}, {})", print(r)),
        RingExpr::TPair(n, m, r) => format!("Tnm({n}, {m}, {})", print(r)),
        RingExpr::UAlt(n, r) => format!("U({n}, {})", print(r)),
    }
}

pub fn print_group(g: &GroupExpr) -> String {
    match g {
        GroupExpr::Cyclic(n) => format!("C({n})"),
        GroupExpr::Prod(a, b) => format!("prod({}, {})", print_group(a), print_group(b)),
        GroupExpr::D4 => "D4".to_string(),
        GroupExpr::Q8 => "Q8".to_string(),
    }
}

// ---------------------------------------------------------------------------
// evaluator
// ---------------------------------------------------------------------------

/// Construct the ring an expression denotes, under the caps in `config`.
/// The result is relabeled with the canonical printed form so corpus labels
/// round-trip through the parser.
pub fn eval(expr: &RingExpr, config: &Config) -> Result<FiniteRing, RingError> {
    let ring = eval_inner(expr, config)?;
    let canonical = print(expr);
    if ring.label() == canonical {
        Ok(ring)
    } else {
        Ok(ring.relabel(canonical))
    }
}

fn eval_inner(expr: &RingExpr, config: &Config) -> Result<FiniteRing, RingError> {
    match expr {
        RingExpr::F2 => construct::zmod(2, config),
        RingExpr::Zmod(n) => construct::zmod(*n, config),
        RingExpr::Matrix(n, r) => {
            let base = eval(r, config)?;
            construct::matrix_ring(*n as usize, &base, config)
        }
        RingExpr::UpperTriangular(n, r) => {
            let base = eval(r, config)?;
            construct::upper_triangular(*n as usize, &base, config)
        }
        RingExpr::Product(rs) => {
            let factors = rs
                .iter()
                .map(|r| eval(r, config))
                .collect::<Result<Vec<_>, _>>()?;
            construct::product(&factors, config)
        }
        RingExpr::TrivExt(r) => {
            let base = eval(r, config)?;
            construct::trivial_extension_regular(&base, config)
        }
        RingExpr::PolyQ(r, n) => {
            let base = eval(r, config)?;
            construct::poly_quotient(&base, *n as usize, config)
        }
        RingExpr::GroupRing(r, g) => {
            let base = eval(r, config)?;
            let group = eval_group(g)?;
            construct::group_ring(&base, &group, config)
        }
        RingExpr::Corner(r, e) => {
            let base = eval(r, config)?;
            let (ring, _) = construct::corner(&base, *e as usize, config)?;
            Ok(ring)
        }
        RingExpr::Quot(r, gens) => {
            let base = eval(r, config)?;
            for &g in gens {
                if g as usize >= base.size() {
                    return Err(RingError::InvalidArgument(format!(
                        "ideal generator {g} out of range for {}",
                        base.label()
                    )));
                }
            }
            let seed = Subset::from_indices(&base, gens.iter().map(|&g| g as usize));
            let ideal = construct::ideal_generated(&base, &seed);
            let (ring, _) = construct::quotient_ring(&base, &ideal, config)?;
            Ok(ring)
        }
        RingExpr::APair(n, m, r) => {
            let base = eval(r, config)?;
            construct::a_ring(*n as usize, *m as usize, &base, config)
        }
        RingExpr::BPair(n, m, r) => {
            let base = eval(r, config)?;
            construct::b_ring(*n as usize, *m as usize, &base, config)
        }
        RingExpr::CAlt(n, r) => {
            let base = eval(r, config)?;
            construct::c_ring(*n as usize, &base, config)
        }
        RingExpr::SGrid(n, m, r) => {
            let base = eval(r, config)?;
            construct::s_ring(*n as usize, *m as usize, &base, config)
        }
        RingExpr::TPair(n, m, r) => {
            let base = eval(r, config)?;
            construct::t_ring(*n as usize, *m as usize, &base, config)
        }
        RingExpr::UAlt(n, r) => {
            let base = eval(r, config)?;
            construct::u_ring(*n as usize, &base, config)
        }
    }
}

fn eval_group(g: &GroupExpr) -> Result<construct::FiniteGroup, RingError> {
    match g {
        GroupExpr::Cyclic(n) => {
            if *n > 64 {
                return Err(RingError::InvalidArgument(format!(
                    "cyclic group order {n} too large"
                )));
            }
            construct::cyclic(*n as usize)
        }
        GroupExpr::Prod(a, b) => {
            let g = eval_group(a)?;
            let h = eval_group(b)?;
            if g.size() * h.size() > 256 {
                return Err(RingError::InvalidArgument("group product too large".into()));
            }
            construct::group_product(&g, &h)
        }
        GroupExpr::D4 => construct::dihedral(4),
        GroupExpr::Q8 => construct::quaternion8(),
    }
}

/// Parse and evaluate in one step.
pub fn parse_and_eval(input: &str, config: &Config) -> Result<FiniteRing, ExprError> {
    let expr = parse(input)?;
    Ok(eval(&expr, config)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn evaluated_sizes() {
        assert_eq!(parse_and_eval("T(3, Zmod(2))", &cfg()).unwrap().size(), 64);
        assert_eq!(
            parse_and_eval("groupring(F2, C(3))", &cfg())
                .unwrap()
                .size(),
            8
        );
        assert_eq!(parse_and_eval("M(2, F2)", &cfg()).unwrap().size(), 16);
        assert_eq!(
            parse_and_eval("product(F2, Zmod(4))", &cfg())
                .unwrap()
                .size(),
            8
        );
        assert_eq!(
            parse_and_eval("trivext(Zmod(4))", &cfg()).unwrap().size(),
            16
        );
        assert_eq!(parse_and_eval("polyq(F2, 3)", &cfg()).unwrap().size(), 8);
        assert_eq!(parse_and_eval("A(2, 2, F2)", &cfg()).unwrap().size(), 8);
        assert_eq!(parse_and_eval("B(2, 3, F2)", &cfg()).unwrap().size(), 64);
        assert_eq!(parse_and_eval("C(3, F2)", &cfg()).unwrap().size(), 16);
        assert_eq!(parse_and_eval("U(4, F2)", &cfg()).unwrap().size(), 64);
        assert_eq!(parse_and_eval("S(2, 2, F2)", &cfg()).unwrap().size(), 16);
        assert_eq!(parse_and_eval("Tnm(2, 2, F2)", &cfg()).unwrap().size(), 8);
        assert_eq!(
            parse_and_eval("quot(Zmod(8), ideal(4))", &cfg())
                .unwrap()
                .size(),
            4
        );
        assert_eq!(
            parse_and_eval("groupring(Zmod(4), prod(C(2), C(2)))", &cfg())
                .unwrap()
                .size(),
            256
        );
    }

    #[test]
    fn unbalanced_input_reports_a_position() {
        let err = parse("M(2, Zmod(2)").unwrap_err();
        assert_eq!(err.position, 12);
        assert!(err.message.contains("')'"));
    }

    #[test]
    fn unknown_names_and_trailing_input_fail() {
        assert!(parse("Frob(3)").is_err());
        assert!(parse("F2 F2").is_err());
        assert!(parse("").is_err());
        assert!(parse("groupring(F2, D5)").is_err());
    }

    #[test]
    fn labels_round_trip_through_the_parser() {
        for text in [
            "corner(M(2, F2), 5)",
            "quot(Zmod(8), ideal(4))",
            "groupring(F2, prod(C(2), C(2)))",
            "Tnm(2, 3, F2)",
        ] {
            let expr = parse(text).unwrap();
            assert_eq!(print(&expr), text);
        }
    }

    #[test]
    fn evaluation_respects_caps() {
        // table cap: Zmod is table-backed
        assert!(matches!(
            parse_and_eval("Zmod(100000)", &cfg()),
            Err(ExprError::Eval(RingError::SizeCapExceeded { .. }))
        ));
        // structure cap with overflow-safe arithmetic
        assert!(matches!(
            parse_and_eval("M(3, Zmod(9))", &cfg()),
            Err(ExprError::Eval(RingError::SizeCapExceeded { .. }))
        ));
        assert!(parse_and_eval("groupring(Zmod(16), C(4))", &cfg()).is_ok());
    }

    #[test]
    fn corner_arguments_are_validated() {
        // 2 is not idempotent in Z/8
        assert!(matches!(
            parse_and_eval("corner(Zmod(8), 2)", &cfg()),
            Err(ExprError::Eval(RingError::NotIdempotent { .. }))
        ));
        // out-of-range generator
        assert!(parse_and_eval("quot(Zmod(8), ideal(9))", &cfg()).is_err());
        // non-ideal is impossible by construction (generators are closed),
        // so the closure of {3} is the whole ring and the quotient collapses
        assert!(matches!(
            parse_and_eval("quot(Zmod(8), ideal(3))", &cfg()),
            Err(ExprError::Eval(RingError::ZeroRing))
        ));
    }

    #[test]
    fn f2_is_zmod2_but_prints_as_itself() {
        let a = parse_and_eval("F2", &cfg()).unwrap();
        let b = parse_and_eval("Zmod(2)", &cfg()).unwrap();
        assert_eq!(a.size(), b.size());
        assert_eq!(a.label(), "F2");
        assert_eq!(b.label(), "Zmod(2)");
    }
}

#[cfg(test)]
mod depth_tests {
    use super::*;

    #[test]
    fn hostile_nesting_is_rejected_not_crashed() {
        let deep = "T(2, ".repeat(100_000) + "F2" + &")".repeat(100_000);
        let err = parse(&deep).unwrap_err();
        assert!(err.message.contains("nesting"));

        let deep_group = "groupring(F2, ".to_string() + &"prod(C(2), ".repeat(100_000) + "C(2)";
        assert!(parse(&deep_group).is_err());
    }

    #[test]
    fn reasonable_nesting_still_parses() {
        let nested = "T(2, ".repeat(20) + "F2" + &")".repeat(20);
        assert!(parse(&nested).is_ok());
    }
}
