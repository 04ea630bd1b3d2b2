//! (p,q)-clans and their combinatorics.
//!
//! A (p,q)-clan on `n = p + q` nodes is an involution-with-signs: some nodes
//! are matched in pairs (arcs), the rest carry a `+` or `-` sign, and the
//! signs balance so that `#(+) - #(-) = p - q`. Clans index the orbits of
//! `GL_p x GL_q` on the full flag variety, and everything geometric about an
//! orbit closure is read off the diagram combinatorics implemented here:
//! the pair of Grassmannian-inverse permutations `u, v`, the Young diagram
//! recording the orbit's shape, the diagram length, the 0-Hecke monoid action
//! of simple reflections, the weak and strong orders, and pattern containment.
//!
//! Text notation writes `+`/`-` for signed nodes, a span digit `k` at the left
//! endpoint of an arc reaching `k` steps to the right, `(k)` when the span
//! needs more than one digit, and `.` at each right endpoint. For example
//! `6-84+-..-+.` is the (5,6)-clan with arcs `(1,7), (3,11), (4,8)`.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::perm::Permutation;

/// Errors from parsing or constructing clans.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ClanError {
    #[error("empty clan notation")]
    Empty,
    #[error("invalid clan character `{ch}` at node {pos}")]
    BadChar { ch: char, pos: usize },
    #[error("unclosed span `(` starting at node {pos}")]
    UnclosedSpan { pos: usize },
    #[error("invalid span `{text}` at node {pos}")]
    BadSpan { text: String, pos: usize },
    #[error("arc from node {pos} with span {span} reaches past the last node")]
    SpanOutOfRange { pos: usize, span: usize },
    #[error("arc from node {pos} lands on node {target}, which is not `.`")]
    SpanTargetNotDot { pos: usize, target: usize },
    #[error("node {target} is the right endpoint of more than one arc")]
    DotDoublyMatched { target: usize },
    #[error("node {pos} is `.` but no arc lands on it")]
    UnmatchedDot { pos: usize },
    #[error("clan has p = {p}, q = {q}; both must be at least 1")]
    InvalidSignature { p: usize, q: usize },
    #[error("nodes do not form an involution without fixed points")]
    BadInvolution,
    #[error("partial permutation is undefined: the clan's v is not the identity")]
    PartialPermUndefined,
    #[error("clans have different shapes: ({0},{1}) vs ({2},{3})")]
    ShapeMismatch(usize, usize, usize, usize),
}

/// One node of a clan: a sign, or a matched node recording its partner
/// (1-indexed).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    Plus,
    Minus,
    Matched(usize),
}

/// A (p,q)-clan.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clan {
    p: usize,
    q: usize,
    nodes: Vec<Node>,
}

impl Clan {
    /// Builds a clan from its nodes, validating the matching and deriving
    /// `(p, q)` from the content.
    pub fn from_nodes(nodes: Vec<Node>) -> Result<Clan, ClanError> {
        if nodes.is_empty() {
            return Err(ClanError::Empty);
        }
        let n = nodes.len();
        let mut arcs = 0;
        let mut plus = 0;
        let mut minus = 0;
        for (idx, node) in nodes.iter().enumerate() {
            let i = idx + 1;
            match node {
                Node::Plus => plus += 1,
                Node::Minus => minus += 1,
                Node::Matched(j) => {
                    if *j < 1 || *j > n || *j == i {
                        return Err(ClanError::BadInvolution);
                    }
                    if nodes[*j - 1] != Node::Matched(i) {
                        return Err(ClanError::BadInvolution);
                    }
                    if *j > i {
                        arcs += 1;
                    }
                }
            }
        }
        let p = arcs + plus;
        let q = arcs + minus;
        if p == 0 || q == 0 {
            return Err(ClanError::InvalidSignature { p, q });
        }
        Ok(Clan { p, q, nodes })
    }

    /// Parses text notation such as `22..`, `1.+1.` or `(11)9753--.....`.
    pub fn parse(text: &str) -> Result<Clan, ClanError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(ClanError::Empty);
        }
        // Tokenize one node per symbol; `(k)` is a single node.
        enum Tok {
            Plus,
            Minus,
            Dot,
            Span(usize),
        }
        let mut toks: Vec<Tok> = Vec::new();
        let mut chars = trimmed.chars().peekable();
        while let Some(ch) = chars.next() {
            let pos = toks.len() + 1;
            match ch {
                '+' => toks.push(Tok::Plus),
                '-' => toks.push(Tok::Minus),
                '.' => toks.push(Tok::Dot),
                '1'..='9' => toks.push(Tok::Span(ch.to_digit(10).unwrap() as usize)),
                '(' => {
                    let mut digits = String::new();
                    loop {
                        match chars.next() {
                            Some(')') => break,
                            Some(d) => digits.push(d),
                            None => return Err(ClanError::UnclosedSpan { pos }),
                        }
                    }
                    let span: usize = digits.parse().map_err(|_| ClanError::BadSpan {
                        text: digits.clone(),
                        pos,
                    })?;
                    if span == 0 {
                        return Err(ClanError::BadSpan { text: digits, pos });
                    }
                    toks.push(Tok::Span(span));
                }
                other => {
                    return Err(ClanError::BadChar { ch: other, pos });
                }
            }
        }
        let n = toks.len();
        let mut nodes: Vec<Option<Node>> = vec![None; n];
        for (idx, tok) in toks.iter().enumerate() {
            let i = idx + 1;
            match tok {
                Tok::Plus => nodes[idx] = Some(Node::Plus),
                Tok::Minus => nodes[idx] = Some(Node::Minus),
                Tok::Dot => {}
                Tok::Span(k) => {
                    let j = i + k;
                    if j > n {
                        return Err(ClanError::SpanOutOfRange { pos: i, span: *k });
                    }
                    if !matches!(toks[j - 1], Tok::Dot) {
                        return Err(ClanError::SpanTargetNotDot { pos: i, target: j });
                    }
                    if nodes[j - 1].is_some() {
                        return Err(ClanError::DotDoublyMatched { target: j });
                    }
                    nodes[idx] = Some(Node::Matched(j));
                    nodes[j - 1] = Some(Node::Matched(i));
                }
            }
        }
        let mut resolved = Vec::with_capacity(n);
        for (idx, node) in nodes.into_iter().enumerate() {
            match node {
                Some(nd) => resolved.push(nd),
                None => return Err(ClanError::UnmatchedDot { pos: idx + 1 }),
            }
        }
        Clan::from_nodes(resolved)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of nodes, `p + q`.
    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> Node {
        self.nodes[i - 1]
    }

    /// The arcs `(i, j)` with `i < j`, sorted by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for (idx, node) in self.nodes.iter().enumerate() {
            if let Node::Matched(j) = node {
                let i = idx + 1;
                if *j > i {
                    arcs.push((i, *j));
                }
            }
        }
        arcs
    }

    /// True when node `i` is matched with a partner to its right.
    pub fn is_left_endpoint(&self, i: usize) -> bool {
        matches!(self.nodes[i - 1], Node::Matched(j) if j > i)
    }

    /// True when node `i` is matched with a partner to its left.
    pub fn is_right_endpoint(&self, i: usize) -> bool {
        matches!(self.nodes[i - 1], Node::Matched(j) if j < i)
    }

    /// True when the clan has no arcs.
    pub fn is_matchless(&self) -> bool {
        self.arcs().is_empty()
    }

    /// True when no two arcs cross (`i < k < j < l` never happens).
    pub fn is_noncrossing(&self) -> bool {
        let arcs = self.arcs();
        for (a, (i, j)) in arcs.iter().enumerate() {
            for (k, l) in arcs.iter().skip(a + 1) {
                if i < k && k < j && j < l {
                    return false;
                }
            }
        }
        true
    }

    /// The clan with every sign flipped; swaps `p` and `q`.
    pub fn reverse_signs(&self) -> Clan {
        let nodes = self
            .nodes
            .iter()
            .map(|node| match node {
                Node::Plus => Node::Minus,
                Node::Minus => Node::Plus,
                Node::Matched(j) => Node::Matched(*j),
            })
            .collect();
        Clan { p: self.q, q: self.p, nodes }
    }

    /// The clan read right to left (signs kept, arcs mirrored).
    pub fn mirror(&self) -> Clan {
        let n = self.n();
        let nodes = (0..n)
            .map(|idx| match self.nodes[n - 1 - idx] {
                Node::Plus => Node::Plus,
                Node::Minus => Node::Minus,
                Node::Matched(j) => Node::Matched(n + 1 - j),
            })
            .collect();
        Clan { p: self.p, q: self.q, nodes }
    }

    /// The (p,q)-clan of maximal length: nested arcs `(i, n+1-i)` for
    /// `i <= min(p,q)`, the middle filled with the majority sign.
    pub fn rainbow(p: usize, q: usize) -> Clan {
        assert!(p >= 1 && q >= 1);
        let n = p + q;
        let m = p.min(q);
        let mut nodes = vec![Node::Plus; n];
        for i in 1..=m {
            nodes[i - 1] = Node::Matched(n + 1 - i);
            nodes[n - i] = Node::Matched(i);
        }
        let middle = if p >= q { Node::Plus } else { Node::Minus };
        for node in nodes.iter_mut().take(n - m).skip(m) {
            *node = middle;
        }
        Clan { p, q, nodes }
    }

    /// True when the clan is the rainbow clan of its shape.
    pub fn is_rainbow(&self) -> bool {
        *self == Clan::rainbow(self.p, self.q)
    }

    /// All (p,q)-clans, sorted by number of arcs and then lexicographically
    /// with `+` before `-` before matched nodes.
    pub fn enumerate(p: usize, q: usize) -> Vec<Clan> {
        assert!(p >= 1 && q >= 1, "clan shapes need p, q >= 1");
        let n = p + q;
        let mut nodes: Vec<Option<Node>> = vec![None; n];
        let mut out = Vec::new();
        fn rec(
            nodes: &mut Vec<Option<Node>>,
            plus: usize,
            minus: usize,
            arcs: usize,
            p: usize,
            q: usize,
            out: &mut Vec<Clan>,
        ) {
            let n = nodes.len();
            let Some(idx) = nodes.iter().position(Option::is_none) else {
                if arcs + plus == p && arcs + minus == q {
                    let resolved = nodes.iter().map(|nd| nd.unwrap()).collect();
                    out.push(Clan { p, q, nodes: resolved });
                }
                return;
            };
            let i = idx + 1;
            if plus < p {
                nodes[idx] = Some(Node::Plus);
                rec(nodes, plus + 1, minus, arcs, p, q, out);
                nodes[idx] = None;
            }
            if minus < q {
                nodes[idx] = Some(Node::Minus);
                rec(nodes, plus, minus + 1, arcs, p, q, out);
                nodes[idx] = None;
            }
            if arcs < p.min(q) {
                for j in i + 1..=n {
                    if nodes[j - 1].is_none() {
                        nodes[idx] = Some(Node::Matched(j));
                        nodes[j - 1] = Some(Node::Matched(i));
                        rec(nodes, plus, minus, arcs + 1, p, q, out);
                        nodes[idx] = None;
                        nodes[j - 1] = None;
                    }
                }
            }
        }
        rec(&mut nodes, 0, 0, 0, p, q, &mut out);
        out.sort();
        out
    }

    /// Sort key: number of arcs first, then node-wise with `+ < - < matched`,
    /// matched nodes compared by partner.
    fn sort_key(&self) -> (usize, usize, Vec<(u8, usize)>) {
        let key = self
            .nodes
            .iter()
            .map(|node| match node {
                Node::Plus => (0u8, 0usize),
                Node::Minus => (1, 0),
                Node::Matched(j) => (2, *j),
            })
            .collect();
        (self.n(), self.arcs().len(), key)
    }

    /// The pair `(u, v)` of inverse-Grassmannian permutations attached to the
    /// clan:
    ///
    /// * `u` labels `-` signs and left endpoints `1..q` from left to right,
    ///   then `+` signs and right endpoints `q+1..n`;
    /// * `v` labels `+` signs and left endpoints `1..p`, then `-` signs and
    ///   right endpoints `p+1..n`.
    pub fn uv_perms(&self) -> (Permutation, Permutation) {
        let n = self.n();
        let mut u = vec![0usize; n];
        let mut v = vec![0usize; n];
        let mut u_low = 0;
        let mut u_high = self.q;
        let mut v_low = 0;
        let mut v_high = self.p;
        for i in 1..=n {
            let left = self.is_left_endpoint(i);
            match (self.nodes[i - 1], left) {
                (Node::Minus, _) | (Node::Matched(_), true) => {
                    u_low += 1;
                    u[i - 1] = u_low;
                }
                _ => {
                    u_high += 1;
                    u[i - 1] = u_high;
                }
            }
            match (self.nodes[i - 1], left) {
                (Node::Plus, _) | (Node::Matched(_), true) => {
                    v_low += 1;
                    v[i - 1] = v_low;
                }
                _ => {
                    v_high += 1;
                    v[i - 1] = v_high;
                }
            }
        }
        let u = Permutation::from_one_line(u).expect("u is a permutation");
        let v = Permutation::from_one_line(v).expect("v is a permutation");
        debug_assert!(u.is_inverse_grassmannian(self.q));
        debug_assert!(v.is_inverse_grassmannian(self.p));
        (u, v)
    }

    /// The Young diagram inside the `p x q` rectangle cut out by the clan's
    /// lattice path: reading nodes left to right, `+` signs and left endpoints
    /// step down the rectangle's left edge and the remaining nodes step left
    /// along the top; row `r` holds the number of horizontal steps taken after
    /// the `r`-th vertical one.
    pub fn young_diagram(&self) -> YoungDiagram {
        let n = self.n();
        let vertical: Vec<bool> = (1..=n)
            .map(|i| matches!(self.nodes[i - 1], Node::Plus) || self.is_left_endpoint(i))
            .collect();
        // Suffix counts of horizontal steps.
        let mut horiz_after = vec![0usize; n + 1];
        for i in (0..n).rev() {
            horiz_after[i] = horiz_after[i + 1] + usize::from(!vertical[i]);
        }
        let rows = (0..n)
            .filter(|&i| vertical[i])
            .map(|i| horiz_after[i + 1])
            .collect();
        YoungDiagram { p: self.p, q: self.q, rows }
    }

    /// Diagram length: total arc span minus the number of crossings. This is
    /// the codimension-graded rank used by both the weak and strong orders.
    pub fn length(&self) -> usize {
        let arcs = self.arcs();
        let span: usize = arcs.iter().map(|(i, j)| j - i).sum();
        let mut crossings = 0;
        for (a, (_, j)) in arcs.iter().enumerate() {
            for (k, l) in arcs.iter().skip(a + 1) {
                // Arcs sorted by left endpoint, so the second left end k is
                // always to the right of the first.
                if k < j && j < l {
                    crossings += 1;
                }
            }
        }
        span - crossings
    }

    /// The 0-Hecke action of the simple reflection `s_i`: opposite signs at
    /// `i, i+1` close into an arc, otherwise the two nodes swap (with their
    /// arcs); the result is kept only when it is longer, else `s_i * c = c`.
    pub fn hecke(&self, i: usize) -> Clan {
        assert!(i >= 1 && i < self.n(), "Hecke index {i} out of range");
        let a = self.nodes[i - 1];
        let b = self.nodes[i];
        let candidate = match (a, b) {
            (Node::Plus, Node::Minus) | (Node::Minus, Node::Plus) => {
                let mut nodes = self.nodes.clone();
                nodes[i - 1] = Node::Matched(i + 1);
                nodes[i] = Node::Matched(i);
                Clan { p: self.p, q: self.q, nodes }
            }
            (Node::Plus, Node::Plus) | (Node::Minus, Node::Minus) => return self.clone(),
            (Node::Matched(j), _) if j == i + 1 => return self.clone(),
            _ => {
                let mut nodes = self.nodes.clone();
                nodes.swap(i - 1, i);
                if let Node::Matched(t) = nodes[i - 1] {
                    nodes[t - 1] = Node::Matched(i);
                }
                if let Node::Matched(t) = nodes[i] {
                    nodes[t - 1] = Node::Matched(i + 1);
                }
                Clan { p: self.p, q: self.q, nodes }
            }
        };
        if candidate.length() > self.length() {
            candidate
        } else {
            self.clone()
        }
    }

    /// Applies a word in the 0-Hecke monoid, rightmost letter first, so that
    /// `hecke_word(&[a, b]) == hecke(b).hecke(a)` reads like `s_a * s_b * c`.
    pub fn hecke_word(&self, word: &[usize]) -> Clan {
        let mut current = self.clone();
        for &i in word.iter().rev() {
            current = current.hecke(i);
        }
        current
    }

    /// The covers of the weak order: indices `i` with `s_i * c != c`,
    /// together with the covering clan. Every cover raises the length by 1.
    pub fn weak_covers(&self) -> Vec<(usize, Clan)> {
        (1..self.n())
            .filter_map(|i| {
                let next = self.hecke(i);
                if next == *self {
                    None
                } else {
                    debug_assert_eq!(next.length(), self.length() + 1);
                    Some((i, next))
                }
            })
            .collect()
    }

    /// Prefix statistic: nodes among the first `i` that are `+` or a right
    /// endpoint.
    fn stat_plus(&self, i: usize) -> usize {
        (1..=i)
            .filter(|&k| matches!(self.nodes[k - 1], Node::Plus) || self.is_right_endpoint(k))
            .count()
    }

    /// Prefix statistic: nodes among the first `i` that are `-` or a right
    /// endpoint.
    fn stat_minus(&self, i: usize) -> usize {
        (1..=i)
            .filter(|&k| matches!(self.nodes[k - 1], Node::Minus) || self.is_right_endpoint(k))
            .count()
    }

    /// Interval statistic: arcs `(s, t)` with `s <= i < j <= t`.
    fn stat_span(&self, i: usize, j: usize) -> usize {
        self.arcs()
            .iter()
            .filter(|(s, t)| *s <= i && i < j && j <= *t)
            .count()
    }

    /// Strong (closure) order on clans of one shape: `self` is below `other`
    /// exactly when every `+`/`-` prefix statistic weakly dominates and every
    /// arc-interval statistic is weakly dominated.
    pub fn strong_leq(&self, other: &Clan) -> Result<bool, ClanError> {
        if self.p != other.p || self.q != other.q {
            return Err(ClanError::ShapeMismatch(self.p, self.q, other.p, other.q));
        }
        let n = self.n();
        for i in 1..=n {
            if self.stat_plus(i) < other.stat_plus(i) || self.stat_minus(i) < other.stat_minus(i) {
                return Ok(false);
            }
        }
        for i in 1..n {
            for j in i + 1..=n {
                if self.stat_span(i, j) > other.stat_span(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Pattern containment: the pattern occurs on a node subset that is closed
    /// under the clan's arcs, induces the pattern's matching, and matches the
    /// pattern's signs on unmatched nodes.
    pub fn contains_pattern(&self, pattern: &Clan) -> bool {
        let k = pattern.n();
        if k > self.n() {
            return false;
        }
        // Depth-first choice of an increasing assignment phi: pattern node t
        // must sit on a clan node of the same kind; a pattern arc forces its
        // right endpoint onto the clan partner of the left endpoint's image,
        // which also enforces arc closure of the chosen subset.
        let mut phi = vec![0usize; k + 1];
        self.pattern_rec(pattern, 1, &mut phi)
    }

    fn pattern_rec(&self, pattern: &Clan, t: usize, phi: &mut Vec<usize>) -> bool {
        let k = pattern.n();
        if t > k {
            return true;
        }
        let lo = phi[t - 1] + 1;
        match pattern.nodes[t - 1] {
            Node::Matched(t2) if t2 < t => {
                // Right endpoint: position forced by the left endpoint.
                let Node::Matched(img) = self.nodes[phi[t2] - 1] else {
                    unreachable!("left endpoint image is matched");
                };
                if img >= lo {
                    phi[t] = img;
                    if self.pattern_rec(pattern, t + 1, phi) {
                        return true;
                    }
                    phi[t] = 0;
                }
                false
            }
            ref want => {
                for i in lo..=self.n() {
                    let ok = match want {
                        Node::Plus => self.nodes[i - 1] == Node::Plus,
                        Node::Minus => self.nodes[i - 1] == Node::Minus,
                        // Left endpoint: image must be a left endpoint too.
                        Node::Matched(_) => self.is_left_endpoint(i),
                    };
                    if ok {
                        phi[t] = i;
                        if self.pattern_rec(pattern, t + 1, phi) {
                            return true;
                        }
                        phi[t] = 0;
                    }
                }
                false
            }
        }
    }

    /// The partial permutation of the clan's arc diagram, defined when `v` is
    /// the identity: entry `r` (for `r = 1..p`) is `Some(n + 1 - j)` when the
    /// node with label `r` starts the arc `(r, j)`, and `None` when it is a
    /// `+` sign.
    pub fn partial_perm(&self) -> Result<Vec<Option<usize>>, ClanError> {
        let (_, v) = self.uv_perms();
        if !v.is_identity() {
            return Err(ClanError::PartialPermUndefined);
        }
        let mut out = Vec::with_capacity(self.p);
        for i in 1..=self.p {
            match self.nodes[i - 1] {
                Node::Matched(j) if j > i => out.push(Some(self.n() + 1 - j)),
                Node::Plus => out.push(None),
                _ => unreachable!("v = id puts + signs and left endpoints first"),
            }
        }
        Ok(out)
    }

    /// The `n x n` integer matrix whose column `i` is `e_{v(i)}`, plus
    /// `e_{v(j)}` when `i` starts the arc `(i, j)`. Always invertible over
    /// the integers.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let (_, v) = self.uv_perms();
        let mut m = vec![vec![0i64; n]; n];
        for i in 1..=n {
            m[v.apply(i) - 1][i - 1] = 1;
            if let Node::Matched(j) = self.nodes[i - 1] {
                if j > i {
                    m[v.apply(j) - 1][i - 1] = 1;
                }
            }
        }
        m
    }
}

impl PartialOrd for Clan {
    fn partial_cmp(&self, other: &Clan) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Clan {
    fn cmp(&self, other: &Clan) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, node) in self.nodes.iter().enumerate() {
            let i = idx + 1;
            match node {
                Node::Plus => f.write_str("+")?,
                Node::Minus => f.write_str("-")?,
                Node::Matched(j) if *j < i => f.write_str(".")?,
                Node::Matched(j) => {
                    let span = j - i;
                    if span <= 9 {
                        write!(f, "{span}")?;
                    } else {
                        write!(f, "({span})")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clan({}, p={}, q={})", self, self.p, self.q)
    }
}

impl Serialize for Clan {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// ---------------------------------------------------------------------------
// Young diagrams
// ---------------------------------------------------------------------------

/// A Young diagram inside the `p x q` rectangle, stored as weakly decreasing
/// row lengths (one entry per row, possibly zero).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct YoungDiagram {
    p: usize,
    q: usize,
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Row lengths, one entry per row of the rectangle.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> usize {
        self.rows[r - 1]
    }

    /// True when cell `(r, c)` (1-indexed) lies inside the diagram.
    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.p && c >= 1 && c <= self.rows[r - 1]
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.p {
            for c in 1..=self.rows[r - 1] {
                out.push((r, c));
            }
        }
        out
    }

    /// Cells of the rectangle outside the diagram, row-major.
    pub fn complement(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.p {
            for c in self.rows[r - 1] + 1..=self.q {
                out.push((r, c));
            }
        }
        out
    }

    /// True when the diagram fills the whole rectangle.
    pub fn is_full(&self) -> bool {
        self.rows.iter().all(|&len| len == self.q)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }
}
