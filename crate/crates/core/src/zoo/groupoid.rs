use crate::algcore::{CheckItem, CheckReport};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite groupoid. `compose[a][b]` is `a ∘ b`, defined iff
/// `target(b) = source(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    pub objects: usize,
    pub arrows: Vec<Arrow>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub inverse: Vec<usize>,
    pub identities: Vec<usize>,
}

impl FiniteGroupoid {
    /// The pair groupoid on `n` objects: one arrow `g_ij` from `j` to `i`
    /// for each ordered pair, so `g_ij ∘ g_jk = g_ik`. Arrows are ordered
    /// by `(source, target)` and named with 1-based indices.
    pub fn pair(n: usize) -> Self {
        let idx = |i: usize, j: usize| j * n + i;
        let mut arrows = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                arrows.push(Arrow { name: format!("g{}{}", i + 1, j + 1), source: j, target: i });
            }
        }
        let mut compose = vec![vec![None; n * n]; n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    compose[idx(i, j)][idx(j, k)] = Some(idx(i, k));
                }
            }
        }
        let inverse = (0..n * n).map(|a| idx(a / n, a % n)).collect();
        let identities = (0..n).map(|i| idx(i, i)).collect();
        FiniteGroupoid { objects: n, arrows, compose, inverse, identities }
    }

    /// A group given by its multiplication table, as a one-object groupoid.
    pub fn group(table: &[Vec<usize>], names: &[String]) -> Result<Self> {
        let m = table.len();
        if names.len() != m || table.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
            return Err(Error::InvalidGroupoid("malformed group table".into()));
        }
        let e = (0..m)
            .find(|&e| (0..m).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroupoid("no identity element".into()))?;
        let inverse = (0..m)
            .map(|x| (0..m).find(|&y| table[x][y] == e && table[y][x] == e))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidGroupoid("element without inverse".into()))?;
        let arrows = names.iter().map(|n| Arrow { name: n.clone(), source: 0, target: 0 }).collect();
        let compose = table.iter().map(|r| r.iter().map(|&c| Some(c)).collect()).collect();
        Ok(FiniteGroupoid { objects: 1, arrows, compose, inverse, identities: vec![e] })
    }

    /// Cyclic group `Z/m` with elements named `1, u, u^2, …`.
    pub fn cyclic(m: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        let names: Vec<String> = (0..m)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "u".to_string(),
                _ => format!("u^{k}"),
            })
            .collect();
        Self::group(&table, &names).expect("cyclic group table is valid")
    }

    /// Disjoint union; arrows of `other` follow those of `self` and get
    /// their names suffixed with `'` when they would clash.
    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> Self {
        let na = self.arrows.len();
        let no = self.objects;
        let mut arrows = self.arrows.clone();
        for a in &other.arrows {
            let mut name = a.name.clone();
            while arrows.iter().any(|b| b.name == name) {
                name.push('\'');
            }
            arrows.push(Arrow { name, source: a.source + no, target: a.target + no });
        }
        let total = arrows.len();
        let mut compose = vec![vec![None; total]; total];
        for (a, row) in self.compose.iter().enumerate() {
            compose[a][..na].clone_from_slice(row);
        }
        for (a, row) in other.compose.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                compose[na + a][na + b] = c.map(|c| c + na);
            }
        }
        let mut inverse = self.inverse.clone();
        inverse.extend(other.inverse.iter().map(|&i| i + na));
        let mut identities = self.identities.clone();
        identities.extend(other.identities.iter().map(|&i| i + na));
        FiniteGroupoid { objects: no + other.objects, arrows, compose, inverse, identities }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.arrows.iter().map(|a| a.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// Category axioms and inverse laws, exhaustively.
pub fn check_groupoid(g: &FiniteGroupoid) -> CheckReport {
    let n = g.len();
    let mut shape = CheckItem::new("shape");
    shape.record_bool(
        &[],
        g.compose.len() == n
            && g.compose.iter().all(|r| r.len() == n && r.iter().flatten().all(|&c| c < n))
            && g.inverse.len() == n
            && g.inverse.iter().all(|&i| i < n)
            && g.identities.len() == g.objects
            && g.identities.iter().all(|&i| i < n)
            && g.arrows.iter().all(|a| a.source < g.objects && a.target < g.objects),
    );
    if !shape.passed {
        return CheckReport { items: vec![shape] };
    }
    let src = |a: usize| g.arrows[a].source;
    let tgt = |a: usize| g.arrows[a].target;

    let mut ids = CheckItem::new("identities");
    for (o, &i) in g.identities.iter().enumerate() {
        ids.record_bool(&[i], src(i) == o && tgt(i) == o);
    }
    let mut defined = CheckItem::new("composition-domain");
    for a in 0..n {
        for b in 0..n {
            let ok = match g.compose[a][b] {
                Some(c) => tgt(b) == src(a) && src(c) == src(b) && tgt(c) == tgt(a),
                None => tgt(b) != src(a),
            };
            defined.record_bool(&[a, b], ok);
        }
    }
    let mut unit = CheckItem::new("identity-laws");
    for a in 0..n {
        let left = g.compose[g.identities[tgt(a)]][a];
        let right = g.compose[a][g.identities[src(a)]];
        unit.record_bool(&[a], left == Some(a) && right == Some(a));
    }
    let mut assoc = CheckItem::new("associativity");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = g.compose[a][b].and_then(|ab| g.compose[ab][c]);
                let rhs = g.compose[b][c].and_then(|bc| g.compose[a][bc]);
                if lhs.is_some() || rhs.is_some() {
                    assoc.record_bool(&[a, b, c], lhs == rhs);
                }
            }
        }
    }
    let mut inv = CheckItem::new("inverse");
    for a in 0..n {
        let ai = g.inverse[a];
        let ok = g.compose[a][ai] == Some(g.identities[tgt(a)]) && g.compose[ai][a] == Some(g.identities[src(a)]);
        inv.record_bool(&[a], ok);
    }
    CheckReport { items: vec![shape, ids, defined, unit, assoc, inv] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_groupoid_layout() {
        let g = FiniteGroupoid::pair(2);
        assert_eq!(g.names(), vec!["g11", "g21", "g12", "g22"]);
        let (g12, g21, g11) = (g.index_of("g12").unwrap(), g.index_of("g21").unwrap(), g.index_of("g11").unwrap());
        assert_eq!(g.compose[g12][g21], Some(g11));
        assert_eq!(g.compose[g12][g12], None);
        assert!(check_groupoid(&g).overall());
    }

    #[test]
    fn groups_and_unions_pass() {
        assert!(check_groupoid(&FiniteGroupoid::cyclic(3)).overall());
        let u = FiniteGroupoid::cyclic(2).disjoint_union(&FiniteGroupoid::cyclic(3));
        assert_eq!(u.objects, 2);
        assert!(check_groupoid(&u).overall());
    }

    #[test]
    fn broken_inverse_is_reported() {
        let mut g = FiniteGroupoid::pair(2);
        g.inverse[1] = 1;
        let r = check_groupoid(&g);
        assert_eq!(r.item("inverse").unwrap().witness().unwrap().indices, vec![1]);
    }
}
