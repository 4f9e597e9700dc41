//! Text format for polynomials in the variables t, u, x, y with integer
//! coefficients read modulo p. The printer output parses back to the same
//! polynomial.

use std::collections::BTreeMap;

use super::field::PrimeField;
use super::poly::Poly;
use super::AlgError;

pub const VARS: [char; 4] = ['t', 'u', 'x', 'y'];

/// Sparse polynomial in t, u, x, y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub field: PrimeField,
    /// exponent vector (t, u, x, y) -> nonzero coefficient
    pub terms: BTreeMap<[u32; 4], u64>,
}

impl MPoly {
    pub fn zero(field: PrimeField) -> Self {
        MPoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        let mut m = Self::zero(field);
        m.add_term([0; 4], c);
        m
    }

    pub fn var(field: PrimeField, v: usize) -> Self {
        let mut e = [0; 4];
        e[v] = 1;
        let mut m = Self::zero(field);
        m.add_term(e, 1);
        m
    }

    pub fn add_term(&mut self, e: [u32; 4], c: u64) {
        let f = self.field;
        let c = c % f.p();
        let entry = self.terms.entry(e).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, *c);
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        let f = self.field;
        MPoly {
            field: f,
            terms: self.terms.iter().map(|(e, c)| (*e, f.neg(*c))).collect(),
        }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let f = self.field;
        let mut r = MPoly::zero(f);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                r.add_term(e, f.mul(*c1, *c2));
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut r = MPoly::constant(self.field, 1);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Largest exponent of variable index `v`.
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn uses(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] > 0)
    }
}

/// Render a polynomial; terms by descending (y, x, u, t) exponents.
pub fn mpoly_to_string(m: &MPoly) -> String {
    let f = m.field;
    if m.terms.is_empty() {
        return "0".to_string();
    }
    let mut keys: Vec<&[u32; 4]> = m.terms.keys().collect();
    keys.sort_by(|a, b| (b[3], b[2], b[1], b[0]).cmp(&(a[3], a[2], a[1], a[0])));
    let mut out = String::new();
    for (idx, e) in keys.iter().enumerate() {
        let c = m.terms[*e];
        let neg = c > f.p() / 2;
        let mag = if neg { f.p() - c } else { c };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for v in 0..4 {
            match e[v] {
                0 => {}
                1 => factors.push(VARS[v].to_string()),
                k => factors.push(format!("{}^{}", VARS[v], k)),
            }
        }
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if mag != 1 {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

pub fn poly_to_string(p: &Poly, var: char) -> String {
    let v = VARS.iter().position(|&c| c == var).expect("known variable");
    let mut m = MPoly::zero(p.field());
    for (i, &c) in p.coeffs().iter().enumerate() {
        if c != 0 {
            let mut e = [0; 4];
            e[v] = i as u32;
            m.add_term(e, c);
        }
    }
    mpoly_to_string(&m)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    field: PrimeField,
}

impl<'a> Parser<'a> {
    fn skip(&mut self) {
        while self.i < self.s.len() && (self.s[self.i] as char).is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.i).copied()
    }

    fn err(&self, msg: &str) -> AlgError {
        AlgError::Parse(format!("{} at offset {}", msg, self.i))
    }

    fn expr(&mut self) -> Result<MPoly, AlgError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, AlgError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.i += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly, AlgError> {
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly, AlgError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.skip();
            let start = self.i;
            while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                self.i += 1;
            }
            let k: u32 = std::str::from_utf8(&self.s[start..self.i])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            if k > 100_000 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, AlgError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.field.p() as u128;
                let mut v: u128 = 0;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    v = (v * 10 + (self.s[self.i] - b'0') as u128) % p;
                    self.i += 1;
                }
                Ok(MPoly::constant(self.field, v as u64))
            }
            Some(c) => {
                if let Some(v) = VARS.iter().position(|&x| x as u8 == c) {
                    self.i += 1;
                    Ok(MPoly::var(self.field, v))
                } else {
                    Err(self.err(&format!("unexpected character '{}'", c as char)))
                }
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse_mpoly(field: PrimeField, s: &str) -> Result<MPoly, AlgError> {
    let mut p = Parser { s: s.as_bytes(), i: 0, field };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parse a univariate polynomial in the given variable.
pub fn parse_poly(field: PrimeField, s: &str, var: char) -> Result<Poly, AlgError> {
    let m = parse_mpoly(field, s)?;
    let v = VARS.iter().position(|&c| c == var).ok_or_else(|| AlgError::Parse(format!("unknown variable {var}")))?;
    let mut c = vec![0u64; m.degree_in(v) as usize + 1];
    for (e, coef) in &m.terms {
        for (w, &k) in e.iter().enumerate() {
            if w != v && k > 0 {
                return Err(AlgError::Parse(format!("unexpected variable {}", VARS[w])));
            }
        }
        c[e[v] as usize] = *coef;
    }
    Ok(Poly::from_coeffs(field, c))
}
