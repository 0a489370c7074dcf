//! Text, LaTeX and JSON forms of [`LaurentPoly`].
//!
//! Text grammar: terms `<int>`, `<int>*t^<int>`, `t^<int>`, `t`, joined by
//! `+`/`-`, in increasing exponent order: `2 + 3*t + t^2 - t^3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::LaurentPoly;
use crate::error::Error;

fn render(p: &LaurentPoly, var: &str, latex: bool) -> String {
    let terms = p.terms();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = if *e == 0 {
            mag.to_string()
        } else {
            let pw = if *e == 1 {
                var.to_string()
            } else if latex {
                format!("{}^{{{}}}", var, e)
            } else {
                format!("{}^{}", var, e)
            };
            if mag.is_one() {
                pw
            } else if latex {
                format!("{}{}", mag, pw)
            } else {
                format!("{}*{}", mag, pw)
            }
        };
        out.push_str(&body);
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, "t", false))
    }
}

impl LaurentPoly {
    pub fn to_text_var(&self, var: &str) -> String {
        render(self, var, false)
    }

    pub fn to_latex(&self) -> String {
        render(self, "t", true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("serialisable")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    var: String,
    terms: Vec<(i32, serde_json::Value)>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        let terms = p
            .terms()
            .into_iter()
            .map(|(e, c)| {
                let n = match i64::try_from(&c) {
                    Ok(v) => serde_json::Value::from(v),
                    Err(_) => serde_json::Value::String(c.to_string()),
                };
                (e, n)
            })
            .collect();
        PolyJson { var: "t".into(), terms }
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::new();
        for (e, n) in raw.terms {
            let text = match n {
                serde_json::Value::String(s) => s,
                other => other.to_string(),
            };
            let c: BigInt = text.parse().map_err(serde::de::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_big_terms(terms))
    }
}

fn parse_term(tok: &str) -> Result<(i32, BigInt), Error> {
    let bad = || Error::Parse(format!("bad polynomial term `{}`", tok));
    let tok = tok.trim();
    if tok.is_empty() {
        return Err(bad());
    }
    let (coef_part, pow_part) = match tok.find('t') {
        None => (tok, None),
        Some(i) => {
            let c = tok[..i].trim().trim_end_matches('*').trim();
            (c, Some(tok[i + 1..].trim()))
        }
    };
    let coef: BigInt = if coef_part.is_empty() {
        BigInt::one()
    } else {
        coef_part.parse().map_err(|_| bad())?
    };
    let exp = match pow_part {
        None => 0,
        Some("") => 1,
        Some(p) => {
            let p = p.strip_prefix('^').ok_or_else(bad)?;
            let p = p.trim().trim_start_matches('{').trim_end_matches('}');
            p.trim().parse::<i32>().map_err(|_| bad())?
        }
    };
    Ok((exp, coef))
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes: Vec<char> = s.chars().collect();
        let mut terms = Vec::new();
        let mut start = 0;
        let mut sign = BigInt::one();
        let mut i = 0;
        while i <= bytes.len() {
            let at_sep = i == bytes.len() || ((bytes[i] == '+' || bytes[i] == '-') && i > 0 && bytes[i - 1] != '^');
            let leading_sign = i == 0 && i < bytes.len() && (bytes[i] == '+' || bytes[i] == '-');
            if leading_sign {
                if bytes[i] == '-' {
                    sign = -BigInt::one();
                }
                start = 1;
            } else if at_sep {
                let tok: String = bytes[start..i].iter().collect();
                let (e, c) = parse_term(&tok)?;
                terms.push((e, &sign * c));
                if i < bytes.len() {
                    sign = if bytes[i] == '-' { -BigInt::one() } else { BigInt::one() };
                }
                start = i + 1;
            }
            i += 1;
        }
        Ok(LaurentPoly::from_big_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let p: LaurentPoly = "2 + 3*t + t^2 - t^3 - t^4".parse().unwrap();
        assert_eq!(p.to_string(), "2 + 3*t + t^2 - t^3 - t^4");
        let q: LaurentPoly = "-t^-2 + 5".parse().unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(-2, -1), (0, 5)]));
        assert_eq!(q.to_string(), "-t^-2 + 5");
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn json_is_sorted_pairs() {
        let p: LaurentPoly = "1 - t^2".parse().unwrap();
        assert_eq!(p.to_json().to_string(), r#"{"var":"t","terms":[[0,1],[2,-1]]}"#);
        let back: LaurentPoly = serde_json::from_value(p.to_json()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn latex_form() {
        let p: LaurentPoly = "2 + t - t^2".parse().unwrap();
        assert_eq!(p.to_latex(), "2 + t - t^{2}");
    }
}
