use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::lexer::{tokenize, Tok, Token};
use crate::cardinals::{Card, CardSet, CofPair, OrdinalIndex};
use crate::error::{Error, Result};
use crate::hahn_concrete::{Exponent, HahnElement, IndexChain, Point, SeriesElement};
use crate::order_terms::{
    AtomDecl, CardinalSchedule, LexRefined, LexSchedule, OrderTerm, PhiDefault, PhiMap, SuccRule,
};
use crate::struct_classify::{Components, FieldDescriptor, GroupDescriptor, Residue};

/// Anything a definition can bind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Term(OrderTerm),
    Group(GroupDescriptor),
    Field(FieldDescriptor),
    Hahn(HahnElement),
    Series(SeriesElement),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Term(_) => "term",
            Value::Group(_) => "group",
            Value::Field(_) => "field",
            Value::Hahn(_) => "hahn",
            Value::Series(_) => "series",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Term(t) => t.fmt(f),
            Value::Group(g) => g.fmt(f),
            Value::Field(k) => k.fmt(f),
            Value::Hahn(h) => h.fmt(f),
            Value::Series(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub value: Value,
}

/// Canonical form: one `NAME = EXPR` line per definition.
pub fn print_definitions(defs: &[Definition]) -> String {
    defs.iter().map(|d| format!("{} = {}\n", d.name, d.value)).collect()
}

pub fn parse_definitions(src: &str) -> Result<Vec<Definition>> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, env: BTreeMap::new() };
    let mut out = Vec::new();
    loop {
        p.skip_newlines();
        if p.at_end() {
            return Ok(out);
        }
        let at = p.peek_token();
        let name = p.ident()?;
        if p.env.contains_key(&name) {
            return Err(p.error_at(&at, format!("`{name}` is defined twice")));
        }
        p.punct('=')?;
        let value = p.value().map_err(|e| match e {
            e @ Error::Parse { .. } => e,
            e => Error::Definition { name: name.clone(), source: Box::new(e) },
        })?;
        p.end_of_statement()?;
        p.env.insert(name.clone(), value.clone());
        out.push(Definition { name, value });
    }
}

/// Parses a single expression.
pub fn parse_value(src: &str) -> Result<Value> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, env: BTreeMap::new() };
    let v = p.value()?;
    p.end_of_statement()?;
    p.skip_newlines();
    if !p.at_end() {
        return Err(p.unexpected("end of input"));
    }
    Ok(v)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    env: BTreeMap<String, Value>,
}

type Fields = Vec<(String, Token)>;

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn skip_newlines(&mut self) {
        while matches!(self.toks.get(self.pos), Some(Token { tok: Tok::Newline, .. })) {
            self.pos += 1;
        }
    }

    fn peek_token(&mut self) -> Token {
        self.skip_newlines();
        self.toks.get(self.pos).cloned().unwrap_or_else(|| {
            let (line, col) = self.toks.last().map_or((1, 1), |t| (t.line, t.col));
            Token { tok: Tok::Newline, line, col }
        })
    }

    fn peek(&mut self) -> Option<Tok> {
        self.skip_newlines();
        self.toks.get(self.pos).map(|t| t.tok.clone())
    }

    fn error_at(&self, t: &Token, msg: String) -> Error {
        Error::Parse { line: t.line, col: t.col, msg }
    }

    fn unexpected(&mut self, wanted: &str) -> Error {
        let t = self.peek_token();
        let found = if self.at_end() { "end of input".to_string() } else { t.describe() };
        self.error_at(&t, format!("expected {wanted}, found {found}"))
    }

    fn end_of_statement(&mut self) -> Result<()> {
        match self.toks.get(self.pos) {
            None | Some(Token { tok: Tok::Newline, .. }) => Ok(()),
            Some(t) => {
                let t = t.clone();
                Err(self.error_at(&t, format!("expected end of line, found {}", t.describe())))
            }
        }
    }

    fn is_punct(&mut self, c: char) -> bool {
        self.peek() == Some(Tok::Punct(c))
    }

    fn eat(&mut self, c: char) -> bool {
        let hit = self.is_punct(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn punct(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let t = self.peek_token();
        match &t.tok {
            Tok::Int(s) if !self.at_end() => {
                self.pos += 1;
                s.parse().map_err(|_| self.error_at(&t, format!("number {s} is too large")))
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    fn bigint(&mut self) -> Result<BigInt> {
        let neg = self.eat('-');
        match self.peek() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let n: BigInt = s.parse().expect("digits");
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn rational(&mut self) -> Result<BigRational> {
        let at = self.peek_token();
        let n = self.bigint()?;
        if !self.eat('/') {
            return Ok(BigRational::from_integer(n));
        }
        let d = self.bigint()?;
        if d == BigInt::from(0) {
            return Err(self.error_at(&at, "zero denominator".into()));
        }
        Ok(BigRational::new(n, d))
    }

    fn boolean(&mut self) -> Result<bool> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == "true" || s == "false" => {
                self.pos += 1;
                Ok(s == "true")
            }
            _ => Err(self.unexpected("`true` or `false`")),
        }
    }

    fn ordinal(&mut self) -> Result<OrdinalIndex> {
        let mut terms = Vec::new();
        loop {
            let (e, c) = if self.peek() == Some(Tok::Ident("w".into())) {
                self.pos += 1;
                let e = if self.eat('^') { self.uint()? } else { 1 };
                let c = if self.eat('*') { self.uint()? } else { 1 };
                (e, c)
            } else {
                (0, self.uint()?)
            };
            let e = u32::try_from(e).map_err(|_| Error::domain("exponent too large"))?;
            terms.push((e, c));
            if !self.eat('+') {
                break;
            }
        }
        let canonical = OrdinalIndex::from_terms(terms.iter().copied());
        let sorted = terms.windows(2).all(|w| w[0].0 > w[1].0);
        let zero_coeff = terms.iter().any(|t| t.1 == 0) && terms != [(0, 0)];
        if !sorted || zero_coeff {
            return Err(Error::domain(format!("index is not in normal form, write {canonical}")));
        }
        Ok(canonical)
    }

    fn card(&mut self) -> Result<Card> {
        match self.peek() {
            Some(Tok::Int(s)) if s == "1" => {
                self.pos += 1;
                Ok(Card::One)
            }
            Some(Tok::Ident(s)) if s == "aleph" => {
                self.pos += 1;
                self.punct('(')?;
                let i = self.ordinal()?;
                self.punct(')')?;
                Ok(Card::Aleph(i))
            }
            _ => Err(self.unexpected("a cardinal")),
        }
    }

    fn list<T>(&mut self, open: char, close: char, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.punct(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.punct(',')?;
        }
    }

    fn card_set(&mut self) -> Result<CardSet> {
        let parts = self.list('{', '}', |p| {
            if p.peek() == Some(Tok::Ident("reg".into())) {
                p.pos += 1;
                p.punct('<')?;
                Ok(CardSet::reg_below(&p.card()?))
            } else {
                CardSet::singleton(&p.card()?)
            }
        })?;
        Ok(parts.iter().fold(CardSet::empty(), |acc, s| acc.union(s)))
    }

    fn pair(&mut self) -> Result<CofPair> {
        self.punct('(')?;
        let l = self.card()?;
        self.punct(',')?;
        let r = self.card()?;
        self.punct(')')?;
        Ok(CofPair::new(l, r))
    }

    fn phi_map(&mut self) -> Result<PhiMap> {
        let mut table = Vec::new();
        let mut default = None;
        self.list('[', ']', |p| {
            if p.eat('*') {
                p.punct(':')?;
                default = Some(if p.peek() == Some(Tok::Ident("succ".into())) {
                    p.pos += 1;
                    PhiDefault::Succ
                } else {
                    PhiDefault::Const(p.card()?)
                });
            } else {
                let k = p.card()?;
                p.punct(':')?;
                table.push((k, p.card()?));
            }
            Ok(())
        })?;
        let m = PhiMap::from_table(table);
        Ok(match default {
            Some(d) => m.with_default(d),
            None => m,
        })
    }

    /// `key=value` or `key<=value` fields separated by `;`, up to `)`.
    /// With `leading`, a `;` also precedes the first field.
    fn fields(
        &mut self,
        leading: bool,
        allowed: &[&str],
        mut val: impl FnMut(&mut Self, &str) -> Result<()>,
    ) -> Result<Fields> {
        let mut seen: Fields = Vec::new();
        while !self.is_punct(')') {
            if leading || !seen.is_empty() {
                self.punct(';')?;
            }
            let at = self.peek_token();
            let key = self.ident()?;
            if !allowed.contains(&key.as_str()) {
                return Err(self.error_at(&at, format!("unknown field `{key}`")));
            }
            if seen.iter().any(|(k, _)| *k == key) {
                return Err(self.error_at(&at, format!("field `{key}` given twice")));
            }
            if key == "card" {
                self.punct('<')?;
            }
            self.punct('=')?;
            val(self, &key)?;
            seen.push((key, at));
        }
        self.punct(')')?;
        Ok(seen)
    }

    fn require<T>(&self, v: Option<T>, key: &str, at: &Token) -> Result<T> {
        v.ok_or_else(|| self.error_at(at, format!("missing field `{key}`")))
    }

    fn reference(&mut self) -> Result<Option<Value>> {
        let at = self.peek_token();
        match self.peek() {
            Some(Tok::Ident(s)) if !KEYWORDS.contains(&s.as_str()) => {
                self.pos += 1;
                match self.env.get(&s) {
                    Some(v) => Ok(Some(v.clone())),
                    None => Err(self.error_at(&at, format!("unknown name or keyword `{s}`"))),
                }
            }
            _ => Ok(None),
        }
    }

    fn value(&mut self) -> Result<Value> {
        if let Some(v) = self.reference()? {
            return Ok(v);
        }
        match self.peek() {
            Some(Tok::Ident(s)) if s == "group" => Ok(Value::Group(self.group()?)),
            Some(Tok::Ident(s)) if s == "field" => Ok(Value::Field(self.field()?)),
            Some(Tok::Ident(s)) if s == "hahn" => Ok(Value::Hahn(self.hahn()?)),
            Some(Tok::Ident(s)) if s == "series" => Ok(Value::Series(self.series()?)),
            _ => Ok(Value::Term(self.term()?)),
        }
    }

    fn term(&mut self) -> Result<OrderTerm> {
        let at = self.peek_token();
        if let Some(v) = self.reference()? {
            return match v {
                Value::Term(t) => Ok(t),
                Value::Group(g) => Ok(OrderTerm::group(g)),
                other => Err(self.error_at(&at, format!("expected an order term, found a {}", other.kind()))),
            };
        }
        let kw = self.ident().map_err(|_| self.unexpected("an order term"))?;
        match kw.as_str() {
            "empty" => Ok(OrderTerm::Empty),
            "fin" => {
                self.punct('(')?;
                let n = self.uint()?;
                self.punct(')')?;
                Ok(OrderTerm::finite(n))
            }
            "well" => {
                self.punct('(')?;
                let k = self.card()?;
                self.punct(')')?;
                OrderTerm::well(k)
            }
            "rev" | "comp" => {
                self.punct('(')?;
                let t = self.term()?;
                self.punct(')')?;
                Ok(if kw == "rev" { OrderTerm::rev(t) } else { OrderTerm::completion(t) })
            }
            "sum" | "lex" => {
                let parts = self.list('(', ')', |p| p.term())?;
                if parts.len() < 2 {
                    return Err(self.error_at(&at, format!("`{kw}` needs at least two arguments")));
                }
                let join = if kw == "sum" { OrderTerm::sum } else { OrderTerm::lex };
                let mut it = parts.into_iter().rev();
                let last = it.next().expect("two parts");
                Ok(it.fold(last, |acc, t| join(t, acc)))
            }
            "order" => {
                self.punct('(')?;
                let g = self.group_expr()?;
                self.punct(')')?;
                Ok(OrderTerm::group(g))
            }
            "atom" => self.atom(),
            "lexsched" => self.lexsched(&at),
            "lexref" => self.lexref(&at),
            other => Err(self.error_at(&at, format!("unknown keyword `{other}`"))),
        }
    }

    fn atom(&mut self) -> Result<OrderTerm> {
        self.punct('(')?;
        let at = self.peek_token();
        let name = self.ident()?;
        let (mut cf, mut ci, mut coin, mut cofin, mut card, mut cuts) = (None, None, None, None, None, None);
        self.fields(true, &["cf", "ci", "coin", "cofin", "card", "cuts"], |p, k| {
            match k {
                "cf" => cf = Some(p.card()?),
                "ci" => ci = Some(p.card()?),
                "coin" => coin = Some(p.card_set()?),
                "cofin" => cofin = Some(p.card_set()?),
                "card" => card = Some(p.card()?),
                _ => cuts = Some(p.list('{', '}', |p| p.pair())?),
            }
            Ok(())
        })?;
        let mut decl = AtomDecl::new(name, self.require(cf, "cf", &at)?, self.require(ci, "ci", &at)?);
        if let Some(s) = coin {
            decl = decl.coin(s);
        }
        if let Some(s) = cofin {
            decl = decl.cofin(s);
        }
        if let Some(k) = card {
            decl = decl.card(k);
        }
        if let Some(c) = cuts {
            decl = decl.cuts(c);
        }
        OrderTerm::atom(decl)
    }

    fn succ_rule(&mut self) -> Result<SuccRule> {
        let at = self.peek_token();
        let kw = self.ident()?;
        SuccRule::from_keyword(&kw).ok_or_else(|| self.error_at(&at, format!("unknown successor rule `{kw}`")))
    }

    fn lexsched(&mut self, at: &Token) -> Result<OrderTerm> {
        self.punct('(')?;
        let allowed = [
            "mu", "base", "k0", "l0", "k1", "l1", "succ", "ksucc", "lsucc", "lim", "klim", "llim", "card",
        ];
        let (mut mu, mut base, mut k0, mut l0, mut card) = (None, None, None, None, None);
        let (mut k1, mut l1, mut ks, mut ls, mut kl, mut ll) = (None, None, None, None, None, None);
        self.fields(false, &allowed, |p, k| {
            match k {
                "mu" => mu = Some(p.card()?),
                "base" => base = Some(p.term()?),
                "k0" => k0 = Some(p.card()?),
                "l0" => l0 = Some(p.card()?),
                "k1" => k1 = Some(p.card()?),
                "l1" => l1 = Some(p.card()?),
                "succ" => {
                    let r = p.succ_rule()?;
                    ks = Some(r);
                    ls = Some(r);
                }
                "ksucc" => ks = Some(p.succ_rule()?),
                "lsucc" => ls = Some(p.succ_rule()?),
                "lim" => p.keyword("mu")?,
                "klim" => kl = Some(p.card()?),
                "llim" => ll = Some(p.card()?),
                _ => card = Some(p.card()?),
            }
            Ok(())
        })?;
        let mu = self.require(mu, "mu", at)?;
        let mut schedule = CardinalSchedule::recipe(&mu)?;
        let (k, l) = (&mut schedule.kappa, &mut schedule.lambda);
        k.first = k1.unwrap_or_else(|| k.first.clone());
        l.first = l1.unwrap_or_else(|| l.first.clone());
        k.rule = ks.unwrap_or(k.rule);
        l.rule = ls.unwrap_or(l.rule);
        k.limit = kl.unwrap_or_else(|| k.limit.clone());
        l.limit = ll.unwrap_or_else(|| l.limit.clone());
        OrderTerm::lex_schedule(LexSchedule {
            mu,
            base: base.unwrap_or(OrderTerm::Empty),
            k0: self.require(k0, "k0", at)?,
            l0: self.require(l0, "l0", at)?,
            schedule,
            card,
        })
    }

    fn lexref(&mut self, at: &Token) -> Result<OrderTerm> {
        self.punct('(')?;
        let (mut mu, mut base, mut k0, mut l0) = (None, None, None, None);
        let (mut phil, mut phir, mut on, mut card) = (None, None, None, None);
        self.fields(false, &["mu", "base", "k0", "l0", "phil", "phir", "on", "card"], |p, k| {
            match k {
                "mu" => mu = Some(p.card()?),
                "base" => base = Some(p.term()?),
                "k0" => k0 = Some(p.card()?),
                "l0" => l0 = Some(p.card()?),
                "phil" => phil = Some(p.phi_map()?),
                "phir" => phir = Some(p.phi_map()?),
                "on" => on = Some(p.card()?),
                _ => card = Some(p.card()?),
            }
            Ok(())
        })?;
        OrderTerm::lex_refined(LexRefined {
            mu: self.require(mu, "mu", at)?,
            base: base.unwrap_or(OrderTerm::Empty),
            k0: self.require(k0, "k0", at)?,
            l0: self.require(l0, "l0", at)?,
            phil: self.require(phil, "phil", at)?,
            phir: self.require(phir, "phir", at)?,
            on,
            card,
        })
    }

    fn group_expr(&mut self) -> Result<GroupDescriptor> {
        let at = self.peek_token();
        match self.reference()? {
            Some(Value::Group(g)) => Ok(g),
            Some(other) => Err(self.error_at(&at, format!("expected a group, found a {}", other.kind()))),
            None => self.group(),
        }
    }

    fn group(&mut self) -> Result<GroupDescriptor> {
        let at = self.peek_token();
        self.keyword("group")?;
        self.punct('(')?;
        let (mut vset, mut comp, mut sph, mut disc, mut div) = (None, None, None, None, None);
        self.fields(false, &["vset", "comp", "spherical", "discrete", "divisible"], |p, k| {
            match k {
                "vset" => vset = Some(p.term()?),
                "comp" => {
                    let at = p.peek_token();
                    let kw = p.ident()?;
                    comp = Some(
                        Components::from_keyword(&kw)
                            .ok_or_else(|| p.error_at(&at, format!("unknown components `{kw}`")))?,
                    );
                }
                "spherical" => sph = Some(p.boolean()?),
                "discrete" => disc = Some(p.boolean()?),
                _ => div = Some(p.boolean()?),
            }
            Ok(())
        })?;
        let comp = comp.unwrap_or(Components::Reals);
        let ints = comp == Components::IntsAtTop;
        GroupDescriptor::new(
            self.require(vset, "vset", &at)?,
            comp,
            sph.unwrap_or(true),
            disc.unwrap_or(ints),
            div.unwrap_or(!ints),
        )
    }

    fn field(&mut self) -> Result<FieldDescriptor> {
        let at = self.peek_token();
        self.keyword("field")?;
        self.punct('(')?;
        let (mut group, mut residue, mut rc, mut sph) = (None, None, None, None);
        self.fields(false, &["group", "residue", "realclosed", "spherical"], |p, k| {
            match k {
                "group" => group = Some(p.group_expr()?),
                "residue" => {
                    let at = p.peek_token();
                    let kw = p.ident()?;
                    residue = Some(
                        Residue::from_keyword(&kw).ok_or_else(|| p.error_at(&at, format!("unknown residue `{kw}`")))?,
                    );
                }
                "realclosed" => rc = Some(p.boolean()?),
                _ => sph = Some(p.boolean()?),
            }
            Ok(())
        })?;
        FieldDescriptor::new(
            self.require(group, "group", &at)?,
            residue.unwrap_or(Residue::Reals),
            rc.unwrap_or(true),
            sph.unwrap_or(true),
        )
    }

    fn index_chain(&mut self) -> Result<IndexChain> {
        let at = self.peek_token();
        match self.ident()?.as_str() {
            "int" => Ok(IndexChain::Integers),
            "rat" => Ok(IndexChain::Rationals),
            "fin" => {
                self.punct('(')?;
                let n = self.uint()?;
                self.punct(')')?;
                Ok(IndexChain::Finite(n))
            }
            "lex" => Ok(IndexChain::Lex(self.list('(', ')', |p| p.index_chain())?)),
            other => Err(self.error_at(&at, format!("unknown index chain `{other}`"))),
        }
    }

    fn point(&mut self, chain: &IndexChain) -> Result<Point> {
        match chain {
            IndexChain::Finite(_) => Ok(Point::Nat(self.uint()?)),
            IndexChain::Integers => Ok(Point::Int(self.bigint()?)),
            IndexChain::Rationals => Ok(Point::Rat(self.rational()?)),
            IndexChain::Lex(cs) => {
                let mut i = 0;
                let ps = self.list('(', ')', |p| {
                    let c = cs.get(i).ok_or_else(|| Error::domain("point has too many coordinates"))?;
                    i += 1;
                    p.point(c)
                })?;
                if ps.len() != cs.len() {
                    return Err(Error::domain("point has too few coordinates"));
                }
                Ok(Point::Tuple(ps))
            }
        }
    }

    fn entries<T>(&mut self, mut key: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<(T, BigRational)>> {
        let mut out = Vec::new();
        if self.eat(';') {
            loop {
                let k = key(self)?;
                self.punct(':')?;
                out.push((k, self.rational()?));
                if !self.eat(',') {
                    break;
                }
            }
        }
        self.punct(')')?;
        Ok(out)
    }

    fn hahn(&mut self) -> Result<HahnElement> {
        self.keyword("hahn")?;
        self.punct('(')?;
        self.keyword("chain")?;
        self.punct('=')?;
        let chain = self.index_chain()?;
        let terms = self.entries(|p| p.point(&chain))?;
        HahnElement::new(chain, terms)
    }

    fn series(&mut self) -> Result<SeriesElement> {
        self.keyword("series")?;
        self.punct('(')?;
        self.keyword("exp")?;
        self.punct('=')?;
        let at = self.peek_token();
        let kw = self.ident()?;
        let dim: usize = kw
            .strip_prefix("lex")
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| self.error_at(&at, format!("expected `lexN`, found `{kw}`")))?;
        let terms = self.entries(|p| p.list('(', ')', |p| p.rational()).map(|v| v as Exponent))?;
        SeriesElement::new(dim, terms)
    }
}

const KEYWORDS: &[&str] = &[
    "empty", "fin", "well", "rev", "sum", "comp", "lex", "atom", "lexsched", "lexref", "order", "group", "field",
    "hahn", "series",
];

/// Parses a lone cardinal such as `aleph(w+1)`.
pub fn parse_card(src: &str) -> Result<Card> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, env: BTreeMap::new() };
    let k = p.card()?;
    p.skip_newlines();
    if !p.at_end() {
        return Err(p.unexpected("end of input"));
    }
    Ok(k)
}
