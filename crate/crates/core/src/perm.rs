//! Permutations of `{1, ..., n}` with an explicit degree.
//!
//! Products follow the "right factor first" convention: `compose(p, q)` is
//! the map `x -> p(q(x))`, so `conjugate_by(g, p)` is `g p g^-1` and relabels
//! each cycle `(a b c)` of `p` to `(g(a) g(b) g(c))`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1, ..., degree}`.
///
/// Points are 1-based in every public method. Two permutations of different
/// degree never compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images; images[i] is the image of point i + 1, minus one.
    images: Vec<u32>,
}

/// Multiset of cycle lengths, fixed points included as 1s, sorted descending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn from_lengths(mut lengths: Vec<usize>) -> Self {
        lengths.retain(|&l| l > 0);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Sum of the lengths, i.e. the number of points described.
    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Number of cycles of exactly `len` points.
    pub fn count(&self, len: usize) -> usize {
        self.lengths.iter().filter(|&&l| l == len).count()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl serde::Serialize for CycleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.lengths.serialize(s)
    }
}

impl Permutation {
    /// The identity of degree `n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation degree must be positive");
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::NotBijection(n));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    /// Builds a permutation from a 0-based point map given only on some points;
    /// unmapped points are fixed.
    pub(crate) fn from_partial(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for (from, to) in pairs {
            images[from] = to as u32;
        }
        Permutation::from_raw(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    ///
    /// # Panics
    /// If `point` is outside `1..=degree`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn at(&self, zero_based: usize) -> usize {
        self.images[zero_based] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4,5)"`; `""` and `"()"`
    /// denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let cycles = parse_cycle_list(text)?;
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in &cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(Error::RepeatedPoint(p));
                }
                used[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Canonical disjoint-cycle string: cycles sorted by minimum point, each
    /// starting at its minimum, fixed points omitted, identity as `"()"`.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&p.to_string());
            }
            s.push(')');
        }
        s
    }

    /// Non-trivial cycles as 1-based point lists, in canonical order.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles_raw()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|p| p + 1).collect())
            .collect()
    }

    /// All cycles including fixed points, 0-based, each starting at its
    /// minimum point, ordered by minimum point.
    pub(crate) fn all_cycles_raw(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.at(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.at(p);
            }
            out.push(cycle);
        }
        out
    }

    /// The permutation `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degrees(self, other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g p g^-1` where `g = self`.
    pub fn conjugate(&self, p: &Permutation) -> Result<Permutation> {
        check_degrees(self, p)?;
        Ok(self.conjugate_unchecked(p))
    }

    pub(crate) fn conjugate_unchecked(&self, p: &Permutation) -> Permutation {
        let mut out = vec![0u32; p.degree()];
        for (a, &pa) in p.images.iter().enumerate() {
            out[self.images[a] as usize] = self.images[pa as usize];
        }
        Permutation { images: out }
    }

    /// `self^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> Permutation {
        let n = self.degree();
        let mut out = vec![0u32; n];
        for cycle in self.all_cycles_raw() {
            let len = cycle.len() as i64;
            let shift = e.rem_euclid(len) as usize;
            for (i, &p) in cycle.iter().enumerate() {
                out[p] = cycle[(i + shift) % cycle.len()] as u32;
            }
        }
        Permutation { images: out }
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_lengths(self.all_cycles_raw().iter().map(Vec::len).collect())
    }

    /// Cycle type of the restriction to `points` (1-based), which must be a
    /// union of cycles.
    pub fn cycle_type_on(&self, points: &[usize]) -> Result<CycleType> {
        let r = self.restrict_to(points)?;
        let inside: BTreeSet<usize> = points.iter().copied().collect();
        Ok(CycleType::from_lengths(
            r.all_cycles_raw()
                .into_iter()
                .filter(|c| inside.contains(&(c[0] + 1)))
                .map(|c| c.len())
                .collect(),
        ))
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.all_cycles_raw()
            .iter()
            .fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }

    /// 1-based fixed points.
    pub fn fixed_points(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i == j as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// 1-based moved points.
    pub fn support(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i != j as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The permutation agreeing with `self` on `points` (1-based) and fixing
    /// everything else. `points` must be mapped onto itself.
    pub fn restrict_to(&self, points: &[usize]) -> Result<Permutation> {
        let n = self.degree();
        let mut inside = vec![false; n];
        for &p in points {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: n,
                });
            }
            inside[p - 1] = true;
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        for &p in points {
            let img = self.at(p - 1);
            if !inside[img] {
                return Err(Error::Precondition(format!(
                    "{} maps point {p} outside the restricted set",
                    self.format_cycles()
                )));
            }
            images[p - 1] = img as u32;
        }
        Ok(Permutation { images })
    }

    pub fn commutes_with(&self, other: &Permutation) -> Result<bool> {
        check_degrees(self, other)?;
        Ok(self.compose_unchecked(other) == other.compose_unchecked(self))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [n={}]", self.format_cycles(), self.degree())
    }
}

/// Parses `"<degree>:<cycles>"`, e.g. `"5:(1 2)(3 4)"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (deg, cycles) = s.split_once(':').ok_or_else(|| Error::Malformed {
            pos: 0,
            msg: "expected <degree>:<cycles>".into(),
        })?;
        let degree = deg.trim().parse::<usize>().map_err(|e| Error::Malformed {
            pos: 0,
            msg: e.to_string(),
        })?;
        Permutation::parse_cycles(cycles, degree)
    }
}

fn check_degrees(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    for &i in images {
        match seen.get_mut(i as usize) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    true
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let malformed = |pos: usize, msg: &str| Error::Malformed {
        pos,
        msg: msg.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(malformed(pos, "expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        // true when a separator (or the opening paren) precedes the cursor
        let mut separated = true;
        let mut commas = 0;
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Err(malformed(pos, "unterminated cycle"));
            }
            match bytes[pos] {
                b')' => {
                    if commas > 0 {
                        return Err(malformed(pos, "trailing comma"));
                    }
                    pos += 1;
                    break;
                }
                b',' => {
                    if cycle.is_empty() || commas > 0 {
                        return Err(malformed(pos, "unexpected comma"));
                    }
                    commas += 1;
                    separated = true;
                    pos += 1;
                }
                b'0'..=b'9' => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if !separated && !cycle.is_empty() {
                        return Err(malformed(start, "missing separator"));
                    }
                    let point: usize = text[start..pos]
                        .parse()
                        .map_err(|_| malformed(start, "point too large"))?;
                    if point == 0 {
                        return Err(malformed(start, "points start at 1"));
                    }
                    if cycle.contains(&point) {
                        return Err(Error::RepeatedPoint(point));
                    }
                    cycle.push(point);
                    commas = 0;
                    // whitespace after the number counts as a separator
                    separated = pos < bytes.len()
                        && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',');
                }
                _ => return Err(malformed(pos, "unexpected character")),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

pub(crate) fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// All permutations of degree `n` in lexicographic order of their image lists.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    LexPermutations {
        next: (n > 0).then(|| (0..n).collect()),
    }
    .map(|v: Vec<usize>| Permutation::from_raw(v.into_iter().map(|x| x as u32).collect()))
}

/// Lexicographic arrangements of `0..k`.
pub(crate) struct LexPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for LexPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
