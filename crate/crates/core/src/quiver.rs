//! Quivers with relations: the text presentation format and the path-class
//! basis of the quotient algebra.
//!
//! Paths compose left to right: `a*b` means "first `a`, then `b`", so it is
//! defined when the target of `a` is the source of `b`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, Weak};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{is_prime, Field, Matrix, Scalar};

/// Default bound on path length used by [`PathAlgebra::from_text`].
pub const DEFAULT_LENGTH_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: unknown label `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: duplicate label `{label}`")]
    DuplicateLabel { line: usize, label: String },
    #[error("line {line}: relation terms are not parallel paths")]
    NonParallel { line: usize },
    #[error("line {line}: path `{path}` is not composable")]
    NotComposable { line: usize, path: String },
    #[error("line {line}: relation term `{path}` has length below 2")]
    ShortRelation { line: usize, path: String },
    #[error("characteristic {0} is not a prime below 65536")]
    NotPrime(u64),
    #[error("missing `{0}` declaration")]
    Missing(&'static str),
    #[error("algebra is not finite dimensional: paths of length {0} survive")]
    NotFiniteDimensional(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of parallel paths, each a sequence of arrow indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Presentation {
    pub name: String,
    pub p: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

/// A path of the quiver. Trivial paths have no arrows and `source == target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

impl Presentation {
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn path_label(&self, path: &Path) -> String {
        if path.arrows.is_empty() {
            format!("e{}", self.vertices[path.source])
        } else {
            path.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// The presentation with every arrow and relation reversed.
    pub fn opposite(&self) -> Presentation {
        Presentation {
            name: format!("{}^op", self.name),
            p: self.p,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r.terms.iter().map(|(c, path)| (*c, path.iter().rev().copied().collect())).collect(),
                })
                .collect(),
        }
    }

    /// Start and end vertex of an arrow sequence, if composable.
    fn endpoints(&self, arrows: &[usize]) -> Option<(usize, usize)> {
        let first = arrows.first()?;
        let mut at = self.arrows[*first].target;
        for &a in &arrows[1..] {
            if self.arrows[a].source != at {
                return None;
            }
            at = self.arrows[a].target;
        }
        Some((self.arrows[*first].source, at))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("algebra {} over GF({})\n", self.name, self.p);
        s.push_str(&format!("vertices: {}\n", self.vertices.join(" ")));
        if !self.arrows.is_empty() {
            let arrows: Vec<String> = self
                .arrows
                .iter()
                .map(|a| format!("{}: {} -> {}", a.label, self.vertices[a.source], self.vertices[a.target]))
                .collect();
            s.push_str(&format!("arrows: {}\n", arrows.join(", ")));
        }
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, path)| {
                            let body: Vec<&str> = path.iter().map(|&a| self.arrows[a].label.as_str()).collect();
                            if *c == 1 {
                                body.join("*")
                            } else {
                                format!("{}*{}", c, body.join("*"))
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(" + ")
                })
                .collect();
            s.push_str(&format!("relations: {}\n", rels.join(", ")));
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Parser

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> QuiverError {
        QuiverError::Syntax { line: self.line, column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), QuiverError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{token}`")))
        }
    }

    fn ident(&mut self) -> Result<&'a str, QuiverError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_' || bytes[self.pos] == b'\'') {
            self.pos += 1;
        }
        if start == self.pos {
            Err(self.err("expected a label"))
        } else {
            Ok(&self.text[start..self.pos])
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parse the text presentation of a quiver with relations.
pub fn parse_presentation(text: &str) -> Result<Presentation, QuiverError> {
    let mut name = None;
    let mut p = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut raw_relations: Vec<(usize, usize, &str)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor { line: line_no, text: body, pos: 0 };
        let keyword = cur.ident()?;
        match keyword {
            "algebra" => {
                let n = cur.ident()?;
                cur.expect("over")?;
                cur.expect("GF")?;
                cur.expect("(")?;
                cur.skip_ws();
                let start = cur.pos;
                while cur.pos < body.len() && body.as_bytes()[cur.pos].is_ascii_digit() {
                    cur.pos += 1;
                }
                let digits = &body[start..cur.pos];
                let value: u64 = digits.parse().map_err(|_| cur.err("expected a characteristic"))?;
                cur.expect(")")?;
                if !cur.at_end() {
                    return Err(cur.err("unexpected trailing input"));
                }
                if !is_prime(value) || value >= 65536 {
                    return Err(QuiverError::NotPrime(value));
                }
                name = Some(n.to_string());
                p = Some(value as u32);
            }
            "vertices" => {
                cur.expect(":")?;
                let mut vs: Vec<String> = Vec::new();
                while !cur.at_end() {
                    let v = cur.ident()?;
                    if vs.iter().any(|x| x == v) {
                        return Err(QuiverError::DuplicateLabel { line: line_no, label: v.to_string() });
                    }
                    vs.push(v.to_string());
                }
                vertices = Some(vs);
            }
            "arrows" => {
                cur.expect(":")?;
                let vs = vertices.as_ref().ok_or(QuiverError::Missing("vertices"))?;
                if cur.at_end() {
                    continue;
                }
                loop {
                    let label = cur.ident()?;
                    cur.expect(":")?;
                    let s = cur.ident()?;
                    cur.expect("->")?;
                    let t = cur.ident()?;
                    let source = vs
                        .iter()
                        .position(|v| v == s)
                        .ok_or_else(|| QuiverError::UnknownLabel { line: line_no, label: s.to_string() })?;
                    let target = vs
                        .iter()
                        .position(|v| v == t)
                        .ok_or_else(|| QuiverError::UnknownLabel { line: line_no, label: t.to_string() })?;
                    if arrows.iter().any(|a| a.label == label) || vs.iter().any(|v| v == label) {
                        return Err(QuiverError::DuplicateLabel { line: line_no, label: label.to_string() });
                    }
                    arrows.push(Arrow { label: label.to_string(), source, target });
                    if cur.at_end() {
                        break;
                    }
                    cur.expect(",")?;
                }
            }
            "relations" => {
                cur.expect(":")?;
                cur.skip_ws();
                raw_relations.push((line_no, cur.pos, body));
            }
            other => {
                return Err(QuiverError::Syntax {
                    line: line_no,
                    column: 1,
                    message: format!("unknown declaration `{other}`"),
                })
            }
        }
    }

    let name = name.ok_or(QuiverError::Missing("algebra"))?;
    let p = p.ok_or(QuiverError::Missing("algebra"))?;
    let vertices = vertices.ok_or(QuiverError::Missing("vertices"))?;
    let mut pres = Presentation { name, p, vertices, arrows, relations: Vec::new() };
    for (line_no, start, body) in raw_relations {
        let mut cur = Cursor { line: line_no, text: body, pos: start };
        if cur.at_end() {
            continue;
        }
        loop {
            let rel = parse_relation(&mut cur, &pres)?;
            if !rel.terms.is_empty() {
                pres.relations.push(rel);
            }
            if cur.at_end() {
                break;
            }
            cur.expect(",")?;
        }
    }
    Ok(pres)
}

fn parse_relation(cur: &mut Cursor<'_>, pres: &Presentation) -> Result<Relation, QuiverError> {
    let f = Field::new(pres.p);
    let mut terms: Vec<(Scalar, Vec<usize>)> = Vec::new();
    let mut ends: Option<(usize, usize)> = None;
    let mut sign: i64 = 1;
    if cur.eat("-") {
        sign = -1;
    }
    loop {
        let mut coeff: i64 = 1;
        let mut path = Vec::new();
        let mut first = true;
        loop {
            if !first {
                cur.expect("*")?;
            }
            let tok = cur.ident()?;
            if first && tok.bytes().all(|b| b.is_ascii_digit()) {
                coeff = tok.parse().map_err(|_| cur.err("coefficient out of range"))?;
                cur.expect("*")?;
                let lbl = cur.ident()?;
                path.push(lookup_arrow(pres, lbl, cur.line)?);
            } else {
                path.push(lookup_arrow(pres, tok, cur.line)?);
            }
            first = false;
            if cur.peek() != Some('*') {
                break;
            }
        }
        let label = path.iter().map(|&a| pres.arrows[a].label.as_str()).collect::<Vec<_>>().join("*");
        if path.len() < 2 {
            return Err(QuiverError::ShortRelation { line: cur.line, path: label });
        }
        let e = pres.endpoints(&path).ok_or(QuiverError::NotComposable { line: cur.line, path: label })?;
        match ends {
            None => ends = Some(e),
            Some(prev) if prev != e => return Err(QuiverError::NonParallel { line: cur.line }),
            _ => {}
        }
        let c = f.from_i64(sign * coeff);
        if c != 0 {
            if let Some(existing) = terms.iter_mut().find(|(_, q)| *q == path) {
                existing.0 = f.add(existing.0, c);
            } else {
                terms.push((c, path));
            }
        }
        if cur.eat("+") {
            sign = 1;
        } else if cur.eat("-") {
            sign = -1;
        } else {
            break;
        }
    }
    terms.retain(|(c, _)| *c != 0);
    Ok(Relation { terms })
}

fn lookup_arrow(pres: &Presentation, label: &str, line: usize) -> Result<usize, QuiverError> {
    pres.arrow_index(label).ok_or_else(|| QuiverError::UnknownLabel { line, label: label.to_string() })
}

// ---------------------------------------------------------------------------
// Path algebra

/// A finite-dimensional quotient of a path algebra, with a basis of path
/// classes and the right action of arrows on that basis.
#[derive(Debug)]
pub struct PathAlgebra {
    pub presentation: Presentation,
    /// Basis paths, sorted by (source, target, length, arrows).
    pub basis: Vec<Path>,
    /// `right_mult[b][a]`: coordinates of `basis[b] * a`, present when
    /// composable.
    right_mult: Vec<Vec<Option<Vec<(usize, Scalar)>>>>,
    opposite: OnceLock<Arc<PathAlgebra>>,
    origin: OnceLock<Weak<PathAlgebra>>,
}

impl PartialEq for PathAlgebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.presentation == other.presentation
    }
}

impl Eq for PathAlgebra {}

fn all_paths_of_length(pres: &Presentation, len: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = (0..pres.vertices.len()).map(Path::trivial).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for path in &layer {
            for (ai, a) in pres.arrows.iter().enumerate() {
                if a.source == path.target {
                    let mut arrows = path.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { source: path.source, target: a.target, arrows });
                }
            }
        }
        layer = next;
    }
    layer
}

impl PathAlgebra {
    /// Parse and build with the default length cap.
    pub fn from_text(text: &str) -> Result<Arc<PathAlgebra>, QuiverError> {
        PathAlgebra::build(parse_presentation(text)?, DEFAULT_LENGTH_CAP)
    }

    /// Build the basis of path classes modulo the ideal generated by the
    /// relations, working degree by degree in the truncation modulo paths of
    /// length `d + 1` until every path of length `d` lies in the ideal.
    pub fn build(pres: Presentation, length_cap: usize) -> Result<Arc<PathAlgebra>, QuiverError> {
        let f = Field::new(pres.p);
        let mut by_len: Vec<Vec<Path>> = vec![all_paths_of_length(&pres, 0)];
        for d in 1..=length_cap.max(1) {
            by_len.push(all_paths_of_length(&pres, d));
            // columns: longest paths first so that pivots favour long paths
            let mut columns: Vec<Path> = Vec::new();
            for l in (0..=d).rev() {
                columns.extend(by_len[l].iter().cloned());
            }
            let index: HashMap<&Path, usize> = columns.iter().enumerate().map(|(i, q)| (q, i)).collect();
            let mut gens: Vec<Vec<Scalar>> = Vec::new();
            for rel in &pres.relations {
                let (s, t) = pres.endpoints(&rel.terms[0].1).expect("validated relation");
                let min_len = rel.terms.iter().map(|(_, q)| q.len()).min().unwrap_or(0);
                if min_len > d {
                    continue;
                }
                for lu in 0..=d - min_len {
                    for u in by_len[lu].iter().filter(|u| u.target == s) {
                        for lv in 0..=d - min_len - lu {
                            for v in by_len[lv].iter().filter(|v| v.source == t) {
                                let mut row = vec![0; columns.len()];
                                let mut nonzero = false;
                                for (c, q) in &rel.terms {
                                    let total = lu + q.len() + lv;
                                    if total > d {
                                        continue;
                                    }
                                    let mut arrows = u.arrows.clone();
                                    arrows.extend_from_slice(q);
                                    arrows.extend_from_slice(&v.arrows);
                                    let key = Path { source: u.source, target: v.target, arrows };
                                    let col = index[&key];
                                    row[col] = f.add(row[col], *c);
                                    nonzero = true;
                                }
                                if nonzero {
                                    gens.push(row);
                                }
                            }
                        }
                    }
                }
            }
            let mut ideal = crate::linalg::RowSpace::new(pres.p, columns.len());
            for g in &gens {
                ideal.insert(g);
            }
            let top_dead = by_len[d].iter().all(|q| {
                let mut e = vec![0; columns.len()];
                e[index[q]] = 1;
                ideal.contains(&e)
            });
            if top_dead {
                return Ok(Arc::new(PathAlgebra::assemble_with_ideal(pres, &by_len[..d], &columns, &ideal)));
            }
        }
        Err(QuiverError::NotFiniteDimensional(length_cap.max(1)))
    }

    fn assemble_with_ideal(
        pres: Presentation,
        by_len: &[Vec<Path>],
        columns: &[Path],
        ideal: &crate::linalg::RowSpace,
    ) -> PathAlgebra {
        let col_index: HashMap<&Path, usize> = columns.iter().enumerate().map(|(i, q)| (q, i)).collect();
        // standard paths: those whose unit vector is not reducible to a
        // combination involving only other columns, i.e. non-pivots
        let mut basis: Vec<Path> = Vec::new();
        for q in by_len.iter().flatten() {
            let mut e = vec![0; columns.len()];
            e[col_index[q]] = 1;
            let r = ideal.reduce(&e);
            // q is a non-pivot column iff it survives reduction unchanged at q
            if r[col_index[q]] != 0 {
                basis.push(q.clone());
            }
        }
        basis.sort_by(|a, b| (a.source, a.target, a.len(), &a.arrows).cmp(&(b.source, b.target, b.len(), &b.arrows)));
        let basis_pos: HashMap<usize, usize> =
            basis.iter().enumerate().map(|(i, q)| (col_index[q], i)).collect();
        let right_mult = basis
            .iter()
            .map(|b| {
                pres.arrows
                    .iter()
                    .enumerate()
                    .map(|(ai, a)| {
                        if a.source != b.target {
                            return None;
                        }
                        let mut arrows = b.arrows.clone();
                        arrows.push(ai);
                        let q = Path { source: b.source, target: a.target, arrows };
                        let mut e = vec![0; columns.len()];
                        e[col_index[&q]] = 1;
                        let r = ideal.reduce(&e);
                        let coords: Vec<(usize, Scalar)> = r
                            .iter()
                            .enumerate()
                            .filter(|(_, &v)| v != 0)
                            .map(|(c, &v)| (*basis_pos.get(&c).expect("normal form uses standard paths"), v))
                            .collect();
                        Some(coords)
                    })
                    .collect()
            })
            .collect();
        PathAlgebra { presentation: pres, basis, right_mult, opposite: OnceLock::new(), origin: OnceLock::new() }
    }

    pub fn p(&self) -> u32 {
        self.presentation.p
    }

    pub fn field(&self) -> Field {
        Field::new(self.presentation.p)
    }

    pub fn name(&self) -> &str {
        &self.presentation.name
    }

    pub fn num_vertices(&self) -> usize {
        self.presentation.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.presentation.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.presentation.arrows[a]
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Indices of basis paths from `s` to `t`, in basis order.
    pub fn paths_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&b| self.basis[b].source == s && self.basis[b].target == t).collect()
    }

    /// Coordinates of `basis[b] * arrow`, or `None` if not composable.
    pub fn right_multiply(&self, b: usize, arrow: usize) -> Option<&[(usize, Scalar)]> {
        self.right_mult[b][arrow].as_deref()
    }

    /// Coordinates of `basis[b] * path` for an arbitrary arrow sequence.
    pub fn multiply_path(&self, b: usize, arrows: &[usize]) -> Option<Vec<(usize, Scalar)>> {
        let f = self.field();
        let mut current: Vec<(usize, Scalar)> = vec![(b, 1)];
        for &a in arrows {
            let mut next: HashMap<usize, Scalar> = HashMap::new();
            for &(x, c) in &current {
                for &(y, d) in self.right_multiply(x, a)? {
                    let e = next.entry(y).or_insert(0);
                    *e = f.add(*e, f.mul(c, d));
                }
            }
            current = next.into_iter().filter(|(_, v)| *v != 0).collect();
            current.sort();
        }
        Some(current)
    }

    /// Matrix of the relation evaluated on a representation whose arrow
    /// matrices are `action`, of shape `dims[target] x dims[source]`.
    pub fn evaluate_relation(&self, rel: &Relation, dims: &[usize], action: &[Matrix]) -> Matrix {
        let (s, t) = self.presentation.endpoints(&rel.terms[0].1).expect("validated relation");
        let mut acc = Matrix::zeros(self.p(), dims[t], dims[s]);
        for (c, path) in &rel.terms {
            let mut m = Matrix::identity(self.p(), dims[s]);
            for &a in path {
                m = action[a].mul(&m);
            }
            acc = acc.add(&m.scale(*c));
        }
        acc
    }

    /// The opposite algebra, cached. Taking the opposite twice returns the
    /// original allocation while it is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<PathAlgebra> {
        if let Some(orig) = self.origin.get().and_then(|w| w.upgrade()) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let op = PathAlgebra::build(self.presentation.opposite(), DEFAULT_LENGTH_CAP.max(self.max_path_len() + 1))
                    .expect("opposite of a finite-dimensional algebra is finite dimensional");
                let _ = op.origin.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    pub fn max_path_len(&self) -> usize {
        self.basis.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    /// Dimension of `P(v)` at each vertex: number of basis paths from `v`.
    pub fn projective_dims(&self, v: usize) -> Vec<usize> {
        (0..self.num_vertices()).map(|t| self.paths_between(v, t).len()).collect()
    }

    /// Dimension of `I(v)` at each vertex: number of basis paths into `v`.
    pub fn injective_dims(&self, v: usize) -> Vec<usize> {
        (0..self.num_vertices()).map(|s| self.paths_between(s, v).len()).collect()
    }

    /// Number of arrows from `i` to `j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.presentation.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    /// Number of relation generators from `i` to `j`.
    pub fn relation_count(&self, i: usize, j: usize) -> usize {
        self.presentation
            .relations
            .iter()
            .filter(|r| self.presentation.endpoints(&r.terms[0].1) == Some((i, j)))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const LAMBDA: &str = "algebra Lambda over GF(2)\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 1, c: 3 -> 2\nrelations: a*b, b*a\n";

    #[test]
    fn parses_three_vertex_presentation() {
        let pres = parse_presentation(LAMBDA).unwrap();
        assert_eq!(pres.vertices.len(), 3);
        assert_eq!(pres.arrows.len(), 3);
        assert_eq!(pres.relations.len(), 2);
    }

    #[test]
    fn semisimple_presentation() {
        let alg = PathAlgebra::from_text("algebra K over GF(2)\nvertices: 1\n").unwrap();
        assert_eq!(alg.dimension(), 1);
        assert_eq!(alg.num_arrows(), 0);
    }

    #[test]
    fn dangling_arrow_is_a_syntax_error() {
        let err = parse_presentation("algebra A over GF(2)\nvertices: 1 2\narrows: a: 1 ->\n").unwrap_err();
        match err {
            QuiverError::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert_eq!(column, 16);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_presentation("algebra A over GF(4)\nvertices: 1\n"),
            Err(QuiverError::NotPrime(4))
        ));
        let non_parallel = "algebra A over GF(2)\nvertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: a*b + b*a\n";
        assert!(matches!(parse_presentation(non_parallel), Err(QuiverError::NonParallel { .. })));
        let unknown = "algebra A over GF(2)\nvertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: a*z\n";
        assert!(matches!(parse_presentation(unknown), Err(QuiverError::UnknownLabel { .. })));
    }

    #[test]
    fn basis_of_three_vertex_algebra() {
        let alg = PathAlgebra::from_text(LAMBDA).unwrap();
        assert_eq!(alg.dimension(), 7);
        let long: Vec<String> =
            alg.basis.iter().filter(|b| b.len() == 2).map(|b| alg.presentation.path_label(b)).collect();
        assert_eq!(long, vec!["c*b".to_string()]);
        assert_eq!(alg.projective_dims(0), vec![1, 1, 0]);
        assert_eq!(alg.projective_dims(1), vec![1, 1, 0]);
        assert_eq!(alg.projective_dims(2), vec![1, 1, 1]);
    }

    #[test]
    fn dual_numbers_and_free_loop() {
        let alg = PathAlgebra::from_text("algebra D over GF(2)\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x\n").unwrap();
        assert_eq!(alg.dimension(), 2);
        let free = parse_presentation("algebra F over GF(2)\nvertices: 1\narrows: x: 1 -> 1\n").unwrap();
        assert!(matches!(PathAlgebra::build(free, 10), Err(QuiverError::NotFiniteDimensional(10))));
    }

    #[test]
    fn commutative_square_relation() {
        // a*c = b*d over GF(3): four vertices, four arrows, one length-2 class
        let text = "algebra Sq over GF(3)\nvertices: 1 2 3 4\narrows: a: 1 -> 2, b: 1 -> 3, c: 2 -> 4, d: 3 -> 4\nrelations: a*c - b*d\n";
        let alg = PathAlgebra::from_text(text).unwrap();
        assert_eq!(alg.dimension(), 9);
    }

    #[test]
    fn opposite_algebra() {
        let alg = PathAlgebra::from_text(LAMBDA).unwrap();
        let op = alg.opposite();
        assert_eq!(op.dimension(), 7);
        let c = op.presentation.arrow_index("c").unwrap();
        assert_eq!((op.arrow(c).source, op.arrow(c).target), (1, 2));
        let back = op.opposite();
        assert!(Arc::ptr_eq(&back, &alg));
    }
}
