//! Operation words, their group elements, and the `+X *Y +Z` normal form.
//!
//! A word is a whitespace-separated sequence of tokens, applied left to
//! right:
//!
//! ```text
//! *{v1,v2,...}   pivot
//! +{v1,v2,...}   loop complementation
//! !{v1,v2,...}   dual pivot
//! loc{v}         local complementation
//! edge{u,v}      edge complementation
//! ```
//!
//! Per vertex, each token contributes one invertible 2x2 matrix over F2
//! ([`Flip2x2`]); flips on different vertices commute and flips on the same
//! vertex compose by matrix product with the *later* operation on the left.
//! Worked trace for `*{a} +{a} *{a}` at vertex `a`: start with the
//! identity; after `*{a}` the accumulated matrix is `STAR`; after `+{a}`
//! it is `PLUS * STAR`; after the final `*{a}` it is
//! `STAR * PLUS * STAR = DUAL`. The whole word therefore acts like `!{a}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ground::{Ground, VertexSet};
use crate::set_system::{Flip2x2, SetSystem};

/// The five token kinds of the word grammar.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OpKind {
    Pivot,
    Loop,
    Dual,
    Local,
    Edge,
}

/// One operation token: a kind plus its vertex arguments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpToken {
    kind: OpKind,
    args: VertexSet,
}

impl OpToken {
    pub fn pivot(args: VertexSet) -> OpToken {
        OpToken {
            kind: OpKind::Pivot,
            args,
        }
    }

    pub fn loop_complement(args: VertexSet) -> OpToken {
        OpToken {
            kind: OpKind::Loop,
            args,
        }
    }

    pub fn dual_pivot(args: VertexSet) -> OpToken {
        OpToken {
            kind: OpKind::Dual,
            args,
        }
    }

    /// Local complementation token; `args` must be a singleton.
    pub fn local(args: VertexSet) -> OpToken {
        assert_eq!(args.len(), 1, "local complementation takes one vertex");
        OpToken {
            kind: OpKind::Local,
            args,
        }
    }

    /// Edge complementation token; `args` must be a pair.
    pub fn edge(args: VertexSet) -> OpToken {
        assert_eq!(args.len(), 2, "edge complementation takes two vertices");
        OpToken {
            kind: OpKind::Edge,
            args,
        }
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn args(&self) -> &VertexSet {
        &self.args
    }

    /// The per-vertex matrix this token multiplies in.
    pub fn flip_matrix(&self) -> Flip2x2 {
        match self.kind {
            OpKind::Pivot | OpKind::Local | OpKind::Edge => Flip2x2::STAR,
            OpKind::Loop => Flip2x2::PLUS,
            OpKind::Dual => Flip2x2::DUAL,
        }
    }
}

impl fmt::Display for OpToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<&str> = self.args.members().collect();
        let body = body.join(",");
        match self.kind {
            OpKind::Pivot => write!(f, "*{{{body}}}"),
            OpKind::Loop => write!(f, "+{{{body}}}"),
            OpKind::Dual => write!(f, "!{{{body}}}"),
            OpKind::Local => write!(f, "loc{{{body}}}"),
            OpKind::Edge => write!(f, "edge{{{body}}}"),
        }
    }
}

/// A parsed word over a fixed ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    ground: Ground,
    tokens: Vec<OpToken>,
}

impl Word {
    pub fn empty(ground: &Ground) -> Word {
        Word {
            ground: ground.clone(),
            tokens: Vec::new(),
        }
    }

    pub fn from_tokens(ground: &Ground, tokens: Vec<OpToken>) -> Word {
        for t in &tokens {
            assert!(
                ground.same_as(t.args().ground()),
                "token built over a different ground"
            );
        }
        Word {
            ground: ground.clone(),
            tokens,
        }
    }

    /// Parses the word grammar. Labels are `[A-Za-z0-9_]+`, commas separate
    /// them, whitespace inside braces is allowed but not required.
    pub fn parse(ground: &Ground, text: &str) -> Result<Word> {
        Parser {
            ground,
            bytes: text.as_bytes(),
            pos: 0,
        }
        .parse()
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn tokens(&self) -> &[OpToken] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    /// The image of the word in the per-vertex flip group.
    pub fn to_element(&self) -> GroupElement {
        GroupElement::from_tokens(&self.ground, &self.tokens)
            .expect("word tokens only contribute invertible flips")
    }

    pub fn normal_form(&self) -> NormalForm {
        self.to_element().normal_form()
    }

    /// Left-to-right application; always defined on set systems.
    pub fn apply_to_set_system(&self, m: &SetSystem) -> SetSystem {
        assert!(self.ground.same_as(m.ground()), "mixed grounds");
        let mut out = m.clone();
        for t in &self.tokens {
            out = match t.kind() {
                OpKind::Pivot | OpKind::Local | OpKind::Edge => out.pivot(t.args()),
                OpKind::Loop => out.loop_complement(t.args()),
                OpKind::Dual => out.dual_pivot(t.args()),
            };
        }
        out
    }

    /// Stepwise application with applicability checks; the error names the
    /// failing step.
    pub fn apply_to_graph(&self, g: &Graph) -> Result<Graph> {
        assert!(self.ground.same_as(g.ground()), "mixed grounds");
        let mut out = g.clone();
        for (step, t) in self.tokens.iter().enumerate() {
            let next = match t.kind() {
                OpKind::Pivot => out.pivot(t.args()),
                OpKind::Loop => Ok(out.loop_complement(t.args())),
                OpKind::Dual => out.dual_pivot(t.args()),
                OpKind::Local => {
                    let u: Vec<&str> = t.args().members().collect();
                    out.local_complement(u[0])
                }
                OpKind::Edge => {
                    let uv: Vec<&str> = t.args().members().collect();
                    out.edge_complement(uv[0], uv[1])
                }
            };
            out = next.map_err(|e| Error::StepFailed {
                step,
                token: t.to_string(),
                source: Box::new(e),
            })?;
        }
        Ok(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    ground: &'a Ground,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Word> {
        let mut tokens = Vec::new();
        loop {
            self.skip_ws();
            if self.pos == self.bytes.len() {
                break;
            }
            tokens.push(self.token()?);
        }
        Ok(Word {
            ground: self.ground.clone(),
            tokens,
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, offset: usize, message: &str) -> Error {
        Error::Parse {
            offset,
            message: message.to_string(),
        }
    }

    fn token(&mut self) -> Result<OpToken> {
        let start = self.pos;
        match self.bytes[self.pos] {
            b'*' => {
                self.pos += 1;
                Ok(OpToken::pivot(self.braced_set()?))
            }
            b'+' => {
                self.pos += 1;
                Ok(OpToken::loop_complement(self.braced_set()?))
            }
            b'!' => {
                self.pos += 1;
                Ok(OpToken::dual_pivot(self.braced_set()?))
            }
            _ => {
                let word = self.take_label_chars();
                match word {
                    "loc" => {
                        let set = self.braced_set()?;
                        if set.len() != 1 {
                            return Err(
                                self.err(start, "loc takes exactly one vertex")
                            );
                        }
                        Ok(OpToken::local(set))
                    }
                    "edge" => {
                        let set = self.braced_set()?;
                        if set.len() != 2 {
                            return Err(
                                self.err(start, "edge takes exactly two distinct vertices")
                            );
                        }
                        Ok(OpToken::edge(set))
                    }
                    _ => Err(self.err(start, "expected `*`, `+`, `!`, `loc` or `edge`")),
                }
            }
        }
    }

    fn take_label_chars(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii range")
    }

    fn braced_set(&mut self) -> Result<VertexSet> {
        if self.pos >= self.bytes.len() || self.bytes[self.pos] != b'{' {
            return Err(self.err(self.pos, "expected `{`"));
        }
        self.pos += 1;
        let mut set = VertexSet::empty(self.ground);
        loop {
            self.skip_ws();
            if self.pos >= self.bytes.len() {
                return Err(self.err(self.pos, "unclosed `{`"));
            }
            if self.bytes[self.pos] == b'}' {
                self.pos += 1;
                return Ok(set);
            }
            if !set.is_empty() {
                if self.bytes[self.pos] != b',' {
                    return Err(self.err(self.pos, "expected `,` or `}`"));
                }
                self.pos += 1;
                self.skip_ws();
            }
            let at = self.pos;
            let label = self.take_label_chars();
            if label.is_empty() {
                return Err(self.err(at, "expected a vertex label"));
            }
            if self.ground.position(label).is_none() {
                return Err(Error::UnknownVertex {
                    label: label.to_string(),
                });
            }
            set = set.union(&VertexSet::singleton(self.ground, label)?);
        }
    }
}

/// An element of the per-vertex flip group: one invertible 2x2 matrix for
/// every vertex, composed pointwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    ground: Ground,
    flips: Vec<Flip2x2>,
}

impl GroupElement {
    pub fn identity(ground: &Ground) -> GroupElement {
        GroupElement {
            ground: ground.clone(),
            flips: vec![Flip2x2::IDENTITY; ground.len()],
        }
    }

    /// Builds from per-vertex matrices; singular entries are rejected.
    pub fn from_flips(ground: &Ground, flips: Vec<Flip2x2>) -> Result<GroupElement> {
        assert_eq!(flips.len(), ground.len(), "one flip per vertex");
        if flips.iter().any(|f| !f.is_invertible()) {
            return Err(Error::NonInvertibleFlip);
        }
        Ok(GroupElement {
            ground: ground.clone(),
            flips,
        })
    }

    /// Accumulates a token sequence, multiplying each new token's matrix on
    /// the left of the per-vertex product.
    pub fn from_tokens(ground: &Ground, tokens: &[OpToken]) -> Result<GroupElement> {
        let mut e = GroupElement::identity(ground);
        for t in tokens {
            assert!(
                ground.same_as(t.args().ground()),
                "token built over a different ground"
            );
            let m = t.flip_matrix();
            for p in t.args().positions() {
                e.flips[p] = m.mul(e.flips[p]);
            }
        }
        Ok(e)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn flip_at(&self, pos: usize) -> Flip2x2 {
        self.flips[pos]
    }

    pub fn is_identity(&self) -> bool {
        self.flips.iter().all(|&f| f == Flip2x2::IDENTITY)
    }

    /// `self` applied first, then `later` (pointwise product with `later`
    /// on the left).
    pub fn then(&self, later: &GroupElement) -> GroupElement {
        assert!(self.ground.same_as(&later.ground), "mixed grounds");
        GroupElement {
            ground: self.ground.clone(),
            flips: self
                .flips
                .iter()
                .zip(&later.flips)
                .map(|(&a, &b)| b.mul(a))
                .collect(),
        }
    }

    /// Least k >= 1 with the k-fold product the identity; divides 6.
    pub fn order(&self) -> u32 {
        self.flips
            .iter()
            .map(|f| f.order().expect("group elements are invertible"))
            .fold(1, lcm)
    }

    pub fn apply_to_set_system(&self, m: &SetSystem) -> SetSystem {
        assert!(self.ground.same_as(m.ground()), "mixed grounds");
        let mut out = m.clone();
        for (p, &f) in self.flips.iter().enumerate() {
            if f != Flip2x2::IDENTITY {
                out = out.vertex_flip_at(f, p);
            }
        }
        out
    }

    /// The canonical `+X *Y +Z` decomposition with `X` contained in `Y`.
    ///
    /// Per vertex the six admissible membership triples (x, y, z) with
    /// x <= y map onto the six invertible matrices by
    /// `PLUS^z * STAR^y * PLUS^x`; the table below inverts that bijection.
    pub fn normal_form(&self) -> NormalForm {
        let mut x = 0u32;
        let mut y = 0u32;
        let mut z = 0u32;
        for (p, f) in self.flips.iter().enumerate() {
            let name = f.classify().expect("group elements are invertible");
            let (xb, yb, zb) = match name {
                crate::set_system::S3::One => (false, false, false),
                crate::set_system::S3::A => (false, false, true),
                crate::set_system::S3::B => (false, true, false),
                crate::set_system::S3::G => (false, true, true),
                crate::set_system::S3::F => (true, true, false),
                crate::set_system::S3::C => (true, true, true),
            };
            x |= (xb as u32) << p;
            y |= (yb as u32) << p;
            z |= (zb as u32) << p;
        }
        NormalForm {
            first_add: VertexSet::from_bits(&self.ground, x),
            pivot: VertexSet::from_bits(&self.ground, y),
            last_add: VertexSet::from_bits(&self.ground, z),
        }
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// The canonical form `+X *Y +Z` of a word, with `X` contained in `Y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    first_add: VertexSet,
    pivot: VertexSet,
    last_add: VertexSet,
}

impl NormalForm {
    /// The set X of the leading loop complementation.
    pub fn first_add(&self) -> &VertexSet {
        &self.first_add
    }

    /// The pivot set Y; always a superset of X.
    pub fn pivot_set(&self) -> &VertexSet {
        &self.pivot
    }

    /// The set Z of the trailing loop complementation.
    pub fn last_add(&self) -> &VertexSet {
        &self.last_add
    }

    pub fn is_identity(&self) -> bool {
        self.first_add.is_empty() && self.pivot.is_empty() && self.last_add.is_empty()
    }

    /// The normal form as a word, empty components skipped.
    pub fn to_word(&self) -> Word {
        let ground = self.first_add.ground().clone();
        let mut tokens = Vec::new();
        if !self.first_add.is_empty() {
            tokens.push(OpToken::loop_complement(self.first_add.clone()));
        }
        if !self.pivot.is_empty() {
            tokens.push(OpToken::pivot(self.pivot.clone()));
        }
        if !self.last_add.is_empty() {
            tokens.push(OpToken::loop_complement(self.last_add.clone()));
        }
        Word::from_tokens(&ground, tokens)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}
