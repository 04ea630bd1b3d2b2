//! Bumpless pipe dream fragments on a clan's Young diagram.
//!
//! A fragment fills the diagram `lambda(c)` of a clan `c` with six tile kinds
//! so that pipes enter from the south boundary, travel monotonically north and
//! east, and exit through the east boundary; the pipe for an arc `(i, j)`
//! connects east row `v(i)` with south column `n + 1 - v(j)`, and no two pipes
//! cross more than once. The minimal fragment (all pipes hugging their
//! corner) is the analogue of a Rothe diagram; every other fragment arises
//! from it by droop moves, which this module enumerates breadth-first.
//!
//! The weight of a fragment is the product of `x_r - x_{n+1-c}` over its
//! blank cells `(r, c)`; summing weights over all fragments of a clan gives
//! the clan's polynomial. A second, droop-free enumeration by exhaustive
//! tile backtracking serves as an independent oracle for testing.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::clan::{Clan, Node, YoungDiagram};
use crate::poly::Polynomial;

/// Errors from fragment construction and the backtracking oracle.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BpdError {
    #[error("backtracking oracle limited to at most 8 nodes, got {n}")]
    OracleTooLarge { n: usize },
    #[error("fragment is not a valid pipe configuration: {reason}")]
    InvalidFragment { reason: String },
}

/// One cell of a fragment. A tile is determined by which of its four edge
/// midpoints carry a pipe: none (`Blank`), west-east (`Horizontal`),
/// north-south (`Vertical`), all four (`Cross`), south-east (`ElbowSE`,
/// drawn as a corner opening down-right), or north-west (`ElbowNW`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Tile {
    Blank,
    Horizontal,
    Vertical,
    Cross,
    ElbowSE,
    ElbowNW,
}

impl Tile {
    pub fn has_north(self) -> bool {
        matches!(self, Tile::Vertical | Tile::Cross | Tile::ElbowNW)
    }

    pub fn has_south(self) -> bool {
        matches!(self, Tile::Vertical | Tile::Cross | Tile::ElbowSE)
    }

    pub fn has_east(self) -> bool {
        matches!(self, Tile::Horizontal | Tile::Cross | Tile::ElbowSE)
    }

    pub fn has_west(self) -> bool {
        matches!(self, Tile::Horizontal | Tile::Cross | Tile::ElbowNW)
    }

    /// Box-drawing glyph used by `render`.
    pub fn glyph(self) -> char {
        match self {
            Tile::Blank => '.',
            Tile::Horizontal => '─',
            Tile::Vertical => '│',
            Tile::Cross => '┼',
            Tile::ElbowSE => '┌',
            Tile::ElbowNW => '┘',
        }
    }

    /// ASCII code used in JSON output: `. - | + F J`.
    pub fn code(self) -> char {
        match self {
            Tile::Blank => '.',
            Tile::Horizontal => '-',
            Tile::Vertical => '|',
            Tile::Cross => '+',
            Tile::ElbowSE => 'F',
            Tile::ElbowNW => 'J',
        }
    }
}

/// A droop move: the elbow at the rectangle's northwest corner `(r1, c1)`
/// slides to the blank southeast corner `(r2, c2)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Droop {
    pub r1: usize,
    pub c1: usize,
    pub r2: usize,
    pub c2: usize,
}

/// A tiling of a clan's Young diagram by pipes.
///
/// Rows are ragged: row `r` stores exactly `lambda_r` tiles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BpdFragment {
    shape: YoungDiagram,
    tiles: Vec<Vec<Tile>>,
}

/// East exit row of a traced pipe plus the crossings it passed, each tagged
/// with whether the pipe ran through that crossing vertically.
type PipeTrace = (usize, Vec<(usize, usize, bool)>);

/// Heading of a pipe walk, which only ever moves north or east.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Heading {
    Up,
    Right,
}

impl BpdFragment {
    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    /// Number of nodes of the underlying clan.
    pub fn n(&self) -> usize {
        self.shape.p() + self.shape.q()
    }

    pub fn tile(&self, r: usize, c: usize) -> Tile {
        self.tiles[r - 1][c - 1]
    }

    pub fn rows(&self) -> &[Vec<Tile>] {
        &self.tiles
    }

    /// Deepest row that still reaches column `c`, or 0 when the column is
    /// empty.
    fn bottom_row(&self, c: usize) -> usize {
        (1..=self.shape.p()).filter(|&r| self.shape.row(r) >= c).count()
    }

    /// The minimal fragment of a clan: one south-east elbow per arc at
    /// `(v(i), n + 1 - v(j))`, extended by a horizontal ray east and a
    /// vertical ray south to the diagram boundary, with crossings where rays
    /// meet.
    pub fn rothe(clan: &Clan) -> BpdFragment {
        let shape = clan.young_diagram();
        let n = clan.n();
        let p = shape.p();
        let (_, v) = clan.uv_perms();
        let mut elbow = vec![vec![false; shape.q() + 1]; p + 1];
        let mut h_ray = vec![vec![false; shape.q() + 1]; p + 1];
        let mut v_ray = vec![vec![false; shape.q() + 1]; p + 1];
        for (i, j) in clan.arcs() {
            let r = v.apply(i);
            let c = n + 1 - v.apply(j);
            debug_assert!(shape.contains(r, c), "arc elbow must land inside the diagram");
            elbow[r][c] = true;
            h_ray[r][c + 1..=shape.row(r)].fill(true);
            for (rr, ray_row) in v_ray.iter_mut().enumerate().skip(r + 1) {
                if shape.row(rr) < c {
                    break;
                }
                ray_row[c] = true;
            }
        }
        let tiles = (1..=p)
            .map(|r| {
                (1..=shape.row(r))
                    .map(|c| {
                        if elbow[r][c] {
                            Tile::ElbowSE
                        } else {
                            match (h_ray[r][c], v_ray[r][c]) {
                                (true, true) => Tile::Cross,
                                (true, false) => Tile::Horizontal,
                                (false, true) => Tile::Vertical,
                                (false, false) => Tile::Blank,
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        BpdFragment { shape, tiles }
    }

    /// All legal droop moves: a south-east elbow at `(r1, c1)`, a blank at
    /// `(r2, c2)` strictly below and to the right inside the diagram, and no
    /// other elbow anywhere in the rectangle between them.
    pub fn droop_moves(&self) -> Vec<Droop> {
        let mut moves = Vec::new();
        for r1 in 1..=self.shape.p() {
            for c1 in 1..=self.shape.row(r1) {
                if self.tile(r1, c1) != Tile::ElbowSE {
                    continue;
                }
                for r2 in r1 + 1..=self.shape.p() {
                    if self.shape.row(r2) <= c1 {
                        break;
                    }
                    'corner: for c2 in c1 + 1..=self.shape.row(r2) {
                        if self.tile(r2, c2) != Tile::Blank {
                            continue;
                        }
                        for r in r1..=r2 {
                            for c in c1..=c2 {
                                if (r, c) != (r1, c1)
                                    && matches!(
                                        self.tile(r, c),
                                        Tile::ElbowSE | Tile::ElbowNW
                                    )
                                {
                                    continue 'corner;
                                }
                            }
                        }
                        moves.push(Droop { r1, c1, r2, c2 });
                    }
                }
            }
        }
        moves
    }

    /// Applies a droop move (which must be legal for this fragment): the
    /// pipe cornering at `(r1, c1)` is rerouted through `(r2, c1)`,
    /// `(r2, c2)` and `(r1, c2)`, leaving the rectangle's interior untouched.
    pub fn apply_droop(&self, mv: &Droop) -> BpdFragment {
        let Droop { r1, c1, r2, c2 } = *mv;
        let mut out = self.clone();
        let set = |f: &mut BpdFragment, r: usize, c: usize, t: Tile| {
            f.tiles[r - 1][c - 1] = t;
        };
        assert_eq!(self.tile(r1, c1), Tile::ElbowSE, "droop needs an elbow at (r1, c1)");
        assert_eq!(self.tile(r2, c2), Tile::Blank, "droop needs a blank at (r2, c2)");
        set(&mut out, r1, c1, Tile::Blank);
        for c in c1 + 1..c2 {
            let t = match self.tile(r1, c) {
                Tile::Horizontal => Tile::Blank,
                Tile::Cross => Tile::Vertical,
                other => panic!("unexpected tile {other:?} on the droop's top edge"),
            };
            set(&mut out, r1, c, t);
        }
        assert_eq!(self.tile(r1, c2), Tile::Horizontal, "top-right droop corner");
        set(&mut out, r1, c2, Tile::ElbowSE);
        for r in r1 + 1..r2 {
            let t = match self.tile(r, c2) {
                Tile::Blank => Tile::Vertical,
                Tile::Horizontal => Tile::Cross,
                other => panic!("unexpected tile {other:?} on the droop's right edge"),
            };
            set(&mut out, r, c2, t);
        }
        set(&mut out, r2, c2, Tile::ElbowNW);
        for c in c1 + 1..c2 {
            let t = match self.tile(r2, c) {
                Tile::Blank => Tile::Horizontal,
                Tile::Vertical => Tile::Cross,
                other => panic!("unexpected tile {other:?} on the droop's bottom edge"),
            };
            set(&mut out, r2, c, t);
        }
        assert_eq!(self.tile(r2, c1), Tile::Vertical, "bottom-left droop corner");
        set(&mut out, r2, c1, Tile::ElbowSE);
        for r in r1 + 1..r2 {
            let t = match self.tile(r, c1) {
                Tile::Vertical => Tile::Blank,
                Tile::Cross => Tile::Horizontal,
                other => panic!("unexpected tile {other:?} on the droop's left edge"),
            };
            set(&mut out, r, c1, t);
        }
        out
    }

    /// All fragments reachable from the droop in one move.
    pub fn successors(&self) -> Vec<BpdFragment> {
        self.droop_moves()
            .iter()
            .map(|mv| self.apply_droop(mv))
            .collect()
    }

    /// All fragments of a clan: breadth-first droop closure of the minimal
    /// fragment, each level sorted in row-major tile order. Every droop adds
    /// exactly one north-west elbow, so levels are disjoint and the output
    /// order is well defined.
    pub fn enumerate(clan: &Clan) -> Vec<BpdFragment> {
        let start = BpdFragment::rothe(clan);
        let mut seen: HashSet<BpdFragment> = HashSet::new();
        seen.insert(start.clone());
        let mut out = Vec::new();
        let mut level = vec![start];
        while !level.is_empty() {
            level.sort();
            out.extend(level.iter().cloned());
            let mut next = Vec::new();
            for frag in &level {
                for succ in frag.successors() {
                    if seen.insert(succ.clone()) {
                        next.push(succ);
                    }
                }
            }
            level = next;
        }
        out
    }

    /// Independent enumeration by exhaustive backtracking over tiles, with
    /// pipe-validity checks; intended as a test oracle and guarded to small
    /// sizes. Output is sorted in row-major tile order.
    pub fn enumerate_oracle(clan: &Clan) -> Result<Vec<BpdFragment>, BpdError> {
        let n = clan.n();
        if n > 8 {
            return Err(BpdError::OracleTooLarge { n });
        }
        let shape = clan.young_diagram();
        let p = shape.p();
        let (_, v) = clan.uv_perms();
        // Boundary conditions: east row r carries a pipe exactly when the
        // node labeled r by v starts an arc; south column c carries one
        // exactly when the node labeled n + 1 - c ends an arc.
        let v_inv = v.inverse();
        let expect_east: Vec<bool> = (1..=p)
            .map(|r| clan.is_left_endpoint(v_inv.apply(r)))
            .collect();
        let expect_south: Vec<bool> = (0..=shape.q())
            .map(|c| c >= 1 && clan.is_right_endpoint(v_inv.apply(n + 1 - c)))
            .collect();
        let expected_arcs: HashSet<(usize, usize)> = clan
            .arcs()
            .iter()
            .map(|(i, j)| (v.apply(*i), n + 1 - v.apply(*j)))
            .collect();
        // Row-major cell list.
        let cells: Vec<(usize, usize)> = shape.cells();
        let mut tiles: Vec<Vec<Tile>> = (1..=p)
            .map(|r| vec![Tile::Blank; shape.row(r)])
            .collect();
        let mut out = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            tiles: &mut Vec<Vec<Tile>>,
            shape: &YoungDiagram,
            expect_east: &[bool],
            expect_south: &[bool],
            expected_arcs: &HashSet<(usize, usize)>,
            out: &mut Vec<BpdFragment>,
        ) {
            if idx == cells.len() {
                let candidate = BpdFragment { shape: shape.clone(), tiles: tiles.clone() };
                if candidate.pipes_match(expected_arcs) {
                    out.push(candidate);
                }
                return;
            }
            let (r, c) = cells[idx];
            let north = r > 1 && tiles[r - 2][c - 1].has_south();
            let west = c > 1 && tiles[r - 1][c - 2].has_east();
            let options: &[Tile] = match (north, west) {
                (false, false) => &[Tile::Blank, Tile::ElbowSE],
                (true, false) => &[Tile::Vertical],
                (false, true) => &[Tile::Horizontal],
                (true, true) => &[Tile::Cross, Tile::ElbowNW],
            };
            let last_in_row = c == shape.row(r);
            let bottom_of_col = r == shape.p() || shape.row(r + 1) < c;
            for &t in options {
                if last_in_row && t.has_east() != expect_east[r - 1] {
                    continue;
                }
                if bottom_of_col && t.has_south() != expect_south[c] {
                    continue;
                }
                tiles[r - 1][c - 1] = t;
                rec(idx + 1, cells, tiles, shape, expect_east, expect_south, expected_arcs, out);
            }
            tiles[r - 1][c - 1] = Tile::Blank;
        }
        rec(
            0,
            &cells,
            &mut tiles,
            &shape,
            &expect_east,
            &expect_south,
            &expected_arcs,
            &mut out,
        );
        out.sort();
        Ok(out)
    }

    /// Traces the pipe entering from the south edge of column `c`.
    /// Returns the east exit row and the crossings passed, each tagged with
    /// whether this pipe ran through vertically.
    fn trace_from_south(&self, c: usize) -> Result<PipeTrace, BpdError> {
        let start_row = self.bottom_row(c);
        if start_row == 0 || !self.tile(start_row, c).has_south() {
            return Err(BpdError::InvalidFragment {
                reason: format!("no pipe enters south column {c}"),
            });
        }
        let (mut r, mut cc) = (start_row, c);
        let mut heading = Heading::Up;
        let mut crossings = Vec::new();
        loop {
            let tile = self.tile(r, cc);
            let next_heading = match (tile, heading) {
                (Tile::Vertical, Heading::Up) => Heading::Up,
                (Tile::Cross, Heading::Up) => {
                    crossings.push((r, cc, true));
                    Heading::Up
                }
                (Tile::ElbowSE, Heading::Up) => Heading::Right,
                (Tile::Horizontal, Heading::Right) => Heading::Right,
                (Tile::Cross, Heading::Right) => {
                    crossings.push((r, cc, false));
                    Heading::Right
                }
                (Tile::ElbowNW, Heading::Right) => Heading::Up,
                (t, h) => {
                    return Err(BpdError::InvalidFragment {
                        reason: format!("pipe heading {h:?} hits tile {t:?} at ({r}, {cc})"),
                    });
                }
            };
            heading = next_heading;
            match heading {
                Heading::Up => {
                    if r == 1 {
                        return Err(BpdError::InvalidFragment {
                            reason: format!("pipe escapes through the north edge at column {cc}"),
                        });
                    }
                    r -= 1;
                }
                Heading::Right => {
                    if cc == self.shape.row(r) {
                        return Ok((r, crossings));
                    }
                    cc += 1;
                }
            }
        }
    }

    /// Full pipe validation: every expected south column connects to the
    /// expected east row, and no two pipes cross twice.
    fn pipes_match(&self, expected_arcs: &HashSet<(usize, usize)>) -> bool {
        let mut found: HashSet<(usize, usize)> = HashSet::new();
        let mut crossing_pairs: HashSet<(usize, usize)> = HashSet::new();
        // Map each crossing cell to the column of the pipe passing through it
        // vertically / horizontally.
        let mut vertical_at: std::collections::HashMap<(usize, usize), usize> =
            std::collections::HashMap::new();
        let mut horizontal_at: std::collections::HashMap<(usize, usize), usize> =
            std::collections::HashMap::new();
        let columns: Vec<usize> = (1..=self.shape.q())
            .filter(|&c| {
                let r = self.bottom_row(c);
                r > 0 && self.tile(r, c).has_south()
            })
            .collect();
        for &c in &columns {
            let Ok((exit_row, crossings)) = self.trace_from_south(c) else {
                return false;
            };
            found.insert((exit_row, c));
            for (r, cc, vertical) in crossings {
                if vertical {
                    vertical_at.insert((r, cc), c);
                } else {
                    horizontal_at.insert((r, cc), c);
                }
            }
        }
        if found != *expected_arcs {
            return false;
        }
        for (cell, &a) in &vertical_at {
            let Some(&b) = horizontal_at.get(cell) else {
                return false;
            };
            let pair = (a.min(b), a.max(b));
            if !crossing_pairs.insert(pair) {
                // Two pipes crossing twice: not reduced.
                return false;
            }
        }
        true
    }

    /// Reads the clan back off the fragment: the shape determines `v`, the
    /// traced pipes give the arcs, and leftover labels become signs.
    pub fn read_clan(&self) -> Result<Clan, BpdError> {
        let shape = &self.shape;
        let p = shape.p();
        let n = self.n();
        // Node positions of the vertical steps: the r-th vertical step is
        // followed by p - r verticals and lambda_r horizontals.
        let mut v_word = vec![0usize; n];
        let mut vertical_pos = Vec::with_capacity(p);
        for r in 1..=p {
            let pos = n - (p - r) - shape.row(r);
            vertical_pos.push(pos);
            v_word[pos - 1] = r;
        }
        let mut next = p;
        for slot in v_word.iter_mut() {
            if *slot == 0 {
                next += 1;
                *slot = next;
            }
        }
        let v = crate::perm::Permutation::from_one_line(v_word)
            .map_err(|e| BpdError::InvalidFragment { reason: format!("bad shape: {e}") })?;
        let v_inv = v.inverse();
        let mut nodes = vec![None; n];
        for c in 1..=shape.q() {
            let r = self.bottom_row(c);
            if r == 0 || !self.tile(r, c).has_south() {
                continue;
            }
            let (exit_row, _) = self.trace_from_south(c)?;
            let i = v_inv.apply(exit_row);
            let j = v_inv.apply(n + 1 - c);
            if i >= j || nodes[i - 1].is_some() || nodes[j - 1].is_some() {
                return Err(BpdError::InvalidFragment {
                    reason: format!("pipes do not form a matching at nodes {i}, {j}"),
                });
            }
            nodes[i - 1] = Some(Node::Matched(j));
            nodes[j - 1] = Some(Node::Matched(i));
        }
        let resolved: Vec<Node> = nodes
            .into_iter()
            .enumerate()
            .map(|(idx, node)| {
                node.unwrap_or(if v.apply(idx + 1) <= p { Node::Plus } else { Node::Minus })
            })
            .collect();
        Clan::from_nodes(resolved).map_err(|e| BpdError::InvalidFragment {
            reason: format!("traced nodes are not a clan: {e}"),
        })
    }

    /// The fragment's blank cells, row-major.
    pub fn blanks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.shape.p() {
            for c in 1..=self.shape.row(r) {
                if self.tile(r, c) == Tile::Blank {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// Fragment weight: the product of `x_r - x_{n+1-c}` over blank cells.
    pub fn weight(&self) -> Polynomial {
        let n = self.n();
        let mut w = Polynomial::one(n);
        for (r, c) in self.blanks() {
            w = w.mul(&Polynomial::x_minus_x(n, r, n + 1 - c));
        }
        w
    }

    /// Unicode rendering with one glyph per tile, rows separated by newlines.
    pub fn render(&self) -> String {
        self.tiles
            .iter()
            .map(|row| row.iter().map(|t| t.glyph()).collect::<String>())
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Tile rows as ASCII code strings.
    pub fn code_rows(&self) -> Vec<String> {
        self.tiles
            .iter()
            .map(|row| row.iter().map(|t| t.code()).collect())
            .collect()
    }

    /// JSON rendering: tile rows as ASCII code strings plus the weight.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "tiles": self.code_rows(),
            "weight": self.weight().to_string(),
        })
    }
}

impl PartialOrd for BpdFragment {
    fn partial_cmp(&self, other: &BpdFragment) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BpdFragment {
    fn cmp(&self, other: &BpdFragment) -> Ordering {
        self.shape
            .rows()
            .cmp(other.shape.rows())
            .then_with(|| self.tiles.cmp(&other.tiles))
    }
}

impl fmt::Debug for BpdFragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BpdFragment(\n{}\n)", self.render())
    }
}

/// The sum of fragment weights of a clan, kept in the `x` alphabet.
pub fn weight_sum(clan: &Clan) -> Polynomial {
    let n = clan.n();
    BpdFragment::enumerate(clan)
        .iter()
        .fold(Polynomial::zero(n), |acc, frag| acc.add(&frag.weight()))
}

/// The clan polynomial: the weight sum written in the `y` alphabet.
pub fn clan_polynomial(clan: &Clan) -> Polynomial {
    weight_sum(clan).rename_x_to_y()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarKind;

    fn clan(text: &str) -> Clan {
        Clan::parse(text).unwrap()
    }

    fn grid(frag: &BpdFragment) -> Vec<String> {
        frag.rows()
            .iter()
            .map(|row| row.iter().map(|t| t.code()).collect())
            .collect()
    }

    #[test]
    fn rothe_of_the_running_example() {
        let frag = BpdFragment::rothe(&clan("6-84+-..-+."));
        assert_eq!(
            grid(&frag),
            vec!["...F--", "F--+-", "|.F+-", "|.||.", "|"]
        );
        assert_eq!(frag.shape().rows(), &[6, 5, 5, 5, 1]);
    }

    #[test]
    fn rothe_small_cases() {
        assert_eq!(grid(&BpdFragment::rothe(&clan("31.."))), vec!["F-", "|F"]);
        assert_eq!(grid(&BpdFragment::rothe(&clan("22.."))), vec![".F", "F+"]);
        assert_eq!(grid(&BpdFragment::rothe(&clan("3+-."))), vec!["F-", "|."]);
        // Matchless clans have a fully blank diagram.
        let blank = BpdFragment::rothe(&clan("++--"));
        assert_eq!(grid(&blank), vec!["..", ".."]);
    }

    #[test]
    fn droops_on_a_2x2_example() {
        let start = BpdFragment::rothe(&clan("3+-."));
        let moves = start.droop_moves();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0], Droop { r1: 1, c1: 1, r2: 2, c2: 2 });
        let dropped = start.apply_droop(&moves[0]);
        assert_eq!(grid(&dropped), vec![".F", "FJ"]);
        assert!(dropped.droop_moves().is_empty());
        let all = BpdFragment::enumerate(&clan("3+-."));
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], start);
        assert_eq!(all[1], dropped);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(BpdFragment::enumerate(&clan("31..")).len(), 1);
        assert_eq!(BpdFragment::enumerate(&clan("22..")).len(), 1);
        assert_eq!(BpdFragment::enumerate(&clan("6-84+-..-+.")).len(), 11);
        // The rainbow clan always has a single fragment: elbows on the
        // diagonal of the full rectangle.
        let rb = BpdFragment::enumerate(&Clan::rainbow(5, 7));
        assert_eq!(rb.len(), 1);
        for (idx, row) in rb[0].rows().iter().enumerate() {
            for (jdx, t) in row.iter().enumerate() {
                let expected = match (idx + 1).cmp(&(jdx + 1)) {
                    Ordering::Equal => Tile::ElbowSE,
                    Ordering::Less => Tile::Horizontal,
                    Ordering::Greater => Tile::Vertical,
                };
                assert_eq!(*t, expected, "tile ({}, {})", idx + 1, jdx + 1);
            }
        }
    }

    #[test]
    fn weights() {
        let n = 4;
        // Rothe of 3+-. has a single blank at (2, 2): weight x2 - x3.
        let start = BpdFragment::rothe(&clan("3+-."));
        assert_eq!(start.weight(), Polynomial::x_minus_x(n, 2, 3));
        // Clan polynomial sums the droop orbit, renamed to y.
        let s = clan_polynomial(&clan("3+-."));
        let expect = Polynomial::y_minus_y(n, 2, 3).add(&Polynomial::y_minus_y(n, 1, 4));
        assert_eq!(s, expect);
        assert_eq!(clan_polynomial(&clan("22..")), Polynomial::y_minus_y(n, 1, 4));
        assert_eq!(clan_polynomial(&clan("31..")), Polynomial::one(n));
        assert!(clan_polynomial(&clan("22..")).is_symmetric_in(VarKind::X, 1, 4));
    }

    #[test]
    fn read_clan_round_trips() {
        for text in ["31..", "22..", "3+-.", "1.+1.", "6-84+-..-+."] {
            let c = clan(text);
            for frag in BpdFragment::enumerate(&c) {
                assert_eq!(frag.read_clan().unwrap(), c, "fragment of {text}");
            }
        }
    }

    #[test]
    fn oracle_agrees_on_small_clans() {
        for text in ["31..", "22..", "3+-.", "1.+1.", "++--"] {
            let c = clan(text);
            let mut droops = BpdFragment::enumerate(&c);
            droops.sort();
            let oracle = BpdFragment::enumerate_oracle(&c).unwrap();
            assert_eq!(droops, oracle, "clan {text}");
        }
        assert_eq!(
            BpdFragment::enumerate_oracle(&clan("6-84+-..-+.")),
            Err(BpdError::OracleTooLarge { n: 11 })
        );
    }

    #[test]
    fn render_uses_box_drawing() {
        assert_eq!(BpdFragment::rothe(&clan("22..")).render(), ".┌\n┌┼");
    }
}
