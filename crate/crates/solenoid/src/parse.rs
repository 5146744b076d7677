//! Text and JSON codecs for the CLI surface.
//!
//! The extension spec mini-language is
//!
//! ```text
//! spec := item (';' item)*
//! item := 'sigma' '=' rat | 'tail' '=' rat | prime ':' rat
//! rat  := ['-'] int ['/' nat]
//! ```
//!
//! with whitespace ignored everywhere, duplicate keys rejected, and prime
//! keys validated. `sigma` and `tail` default to 0. Adele classes use the
//! same grammar with `real` in place of `sigma`. Parse errors carry
//! 1-based line/column positions and the offending token.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::adele::{AdeleClass, FiniteAdele};
use crate::error::{Error, Result};
use crate::extension::{ExtPresentation, RigidExt};
use crate::primes::Prime;
use crate::rat::Rat;

/// The parsed form of an extension spec.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtSpec {
    pub sigma: Rat,
    pub tail: Rat,
    pub overrides: BTreeMap<Prime, Rat>,
}

impl ExtSpec {
    pub fn finite_adele(&self) -> FiniteAdele {
        FiniteAdele::from_parts(self.tail.clone(), self.overrides.clone())
    }

    pub fn into_rigid(self) -> RigidExt {
        let fin = FiniteAdele::from_parts(self.tail, self.overrides);
        RigidExt::new(ExtPresentation::new(fin), self.sigma)
    }
}

/// Parse an extension spec (`sigma=`, `tail=`, `p:` items).
pub fn parse_ext_spec(input: &str) -> Result<ExtSpec> {
    let mut scalars = parse_items(input, "sigma")?;
    Ok(ExtSpec {
        sigma: scalars.named.remove("sigma").unwrap_or_else(Rat::zero),
        tail: scalars.named.remove("tail").unwrap_or_else(Rat::zero),
        overrides: scalars.overrides,
    })
}

/// Parse an adele class (`real=`, `tail=`, `p:` items) and canonicalize.
pub fn parse_adele_class(input: &str) -> Result<AdeleClass> {
    let mut scalars = parse_items(input, "real")?;
    let real = scalars.named.remove("real").unwrap_or_else(Rat::zero);
    let tail = scalars.named.remove("tail").unwrap_or_else(Rat::zero);
    let fin = FiniteAdele::from_parts(tail, scalars.overrides);
    Ok(AdeleClass::canonicalize(real, fin))
}

struct ParsedItems {
    named: BTreeMap<&'static str, Rat>,
    overrides: BTreeMap<Prime, Rat>,
}

struct Scanner<'a> {
    rest: std::str::Chars<'a>,
    peeked: Option<char>,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Scanner<'a> {
        Scanner {
            rest: input.chars(),
            peeked: None,
            line: 1,
            col: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        if self.peeked.is_none() {
            self.peeked = self.rest.next();
        }
        self.peeked
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.peeked = None;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn error(&mut self, expected: &str) -> Error {
        let (line, col) = (self.line, self.col);
        let token = match self.peek() {
            None => "end of input".to_string(),
            Some(_) => {
                let mut t = String::new();
                while let Some(c) = self.peek() {
                    if c.is_whitespace() || t.len() >= 12 {
                        break;
                    }
                    t.push(c);
                    self.bump();
                }
                t
            }
        };
        Error::Parse {
            line,
            col,
            token,
            expected: expected.to_string(),
        }
    }

    fn digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() {
            return Err(self.error("digits"));
        }
        Ok(s)
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            s.push(self.bump().unwrap());
        }
        s
    }

    fn rat(&mut self) -> Result<Rat> {
        self.skip_ws();
        let mut text = String::new();
        if self.peek() == Some('-') {
            self.bump();
            text.push('-');
        }
        self.skip_ws();
        text.push_str(&self.digits()?);
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let den = self.digits()?;
            if den.chars().all(|c| c == '0') {
                return Err(Error::Parse {
                    line: self.line,
                    col: self.col,
                    token: den,
                    expected: "a nonzero denominator".to_string(),
                });
            }
            text.push('/');
            text.push_str(&den);
        }
        text.parse()
    }
}

fn parse_items(input: &str, slope_key: &'static str) -> Result<ParsedItems> {
    let mut sc = Scanner::new(input);
    let mut named: BTreeMap<&'static str, Rat> = BTreeMap::new();
    let mut overrides: BTreeMap<Prime, Rat> = BTreeMap::new();
    let expected_item = format!("`{slope_key}=`, `tail=`, or `<prime>:<rat>`");

    sc.skip_ws();
    if sc.peek().is_none() {
        // an empty spec means all defaults
        return Ok(ParsedItems { named, overrides });
    }
    loop {
        sc.skip_ws();
        match sc.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let (line, col) = (sc.line, sc.col);
                let key = sc.ident();
                let canonical: &'static str = if key == slope_key {
                    slope_key
                } else if key == "tail" {
                    "tail"
                } else {
                    return Err(Error::Parse {
                        line,
                        col,
                        token: key,
                        expected: expected_item.clone(),
                    });
                };
                sc.skip_ws();
                if sc.peek() != Some('=') {
                    return Err(sc.error("`=`"));
                }
                sc.bump();
                let value = sc.rat()?;
                if named.insert(canonical, value).is_some() {
                    return Err(Error::Parse {
                        line,
                        col,
                        token: key,
                        expected: "each key at most once".to_string(),
                    });
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let (line, col) = (sc.line, sc.col);
                let digits = sc.digits()?;
                let n: u64 = digits.parse().map_err(|_| Error::Parse {
                    line,
                    col,
                    token: digits.clone(),
                    expected: "a prime that fits in 64 bits".to_string(),
                })?;
                let p = Prime::new(n).map_err(|_| Error::Parse {
                    line,
                    col,
                    token: digits.clone(),
                    expected: "a prime component index".to_string(),
                })?;
                sc.skip_ws();
                if sc.peek() != Some(':') {
                    return Err(sc.error("`:`"));
                }
                sc.bump();
                let value = sc.rat()?;
                if overrides.insert(p, value).is_some() {
                    return Err(Error::Parse {
                        line,
                        col,
                        token: digits,
                        expected: "each prime at most once".to_string(),
                    });
                }
            }
            _ => return Err(sc.error(&expected_item)),
        }
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(';') => {
                sc.bump();
            }
            Some(_) => return Err(sc.error("`;` or end of input")),
        }
    }
    Ok(ParsedItems { named, overrides })
}

fn overrides_json(fin: &FiniteAdele) -> Value {
    let mut map = Map::new();
    for (p, v) in fin.overrides() {
        map.insert(p.to_string(), Value::String(v.to_string()));
    }
    Value::Object(map)
}

/// JSON form of an adele class: rationals as strings, primes ascending.
pub fn class_to_json(x: &AdeleClass) -> Value {
    json!({
        "real": x.real().to_string(),
        "tail": x.fin().tail().to_string(),
        "overrides": overrides_json(x.fin()),
    })
}

/// JSON form of a rigidified extension.
pub fn rigid_to_json(e: &RigidExt) -> Value {
    json!({
        "sigma": e.sigma().to_string(),
        "tail": e.presentation().data().tail().to_string(),
        "overrides": overrides_json(e.presentation().data()),
    })
}

fn json_err(context: &str) -> Error {
    Error::Parse {
        line: 1,
        col: 1,
        token: context.to_string(),
        expected: "a valid JSON object".to_string(),
    }
}

fn json_rat(obj: &Map<String, Value>, key: &str) -> Result<Rat> {
    match obj.get(key) {
        None => Ok(Rat::zero()),
        Some(Value::String(s)) => s.parse(),
        Some(other) => Err(json_err(&other.to_string())),
    }
}

fn json_overrides(obj: &Map<String, Value>) -> Result<BTreeMap<Prime, Rat>> {
    let mut out = BTreeMap::new();
    if let Some(value) = obj.get("overrides") {
        let map = value.as_object().ok_or_else(|| json_err("overrides"))?;
        for (k, v) in map {
            let n: u64 = k.parse().map_err(|_| json_err(k))?;
            let p = Prime::new(n)?;
            let s = v.as_str().ok_or_else(|| json_err(&v.to_string()))?;
            if out.insert(p, s.parse()?).is_some() {
                return Err(Error::DuplicateKey(k.clone()));
            }
        }
    }
    Ok(out)
}

/// Parse the JSON form of an adele class and canonicalize.
pub fn class_from_json(v: &Value) -> Result<AdeleClass> {
    let obj = v.as_object().ok_or_else(|| json_err(&v.to_string()))?;
    let real = json_rat(obj, "real")?;
    let tail = json_rat(obj, "tail")?;
    let fin = FiniteAdele::from_parts(tail, json_overrides(obj)?);
    Ok(AdeleClass::canonicalize(real, fin))
}

/// Parse the JSON form of a rigidified extension.
pub fn rigid_from_json(v: &Value) -> Result<RigidExt> {
    let obj = v.as_object().ok_or_else(|| json_err(&v.to_string()))?;
    let sigma = json_rat(obj, "sigma")?;
    let tail = json_rat(obj, "tail")?;
    let fin = FiniteAdele::from_parts(tail, json_overrides(obj)?);
    Ok(RigidExt::new(ExtPresentation::new(fin), sigma))
}
