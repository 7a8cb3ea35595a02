//! Finite groups as index tables, plus the conjugacy bookkeeping (class
//! representatives `g_C`, transporters `w_g`, centralizers `G_C`).

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Failure, Result};

/// Default cap on the size of a permutation-group closure.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// A finite group on `0..order`, identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    names: Option<Vec<String>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Product of a word, left to right.
    pub fn prod(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    /// `x g x⁻¹`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv[x])
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, g: usize) -> String {
        match &self.names {
            Some(n) => n[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<GroupTable> {
        if names.len() != self.order {
            return Err(Error::format("names list length differs from group order"));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// The multiplication table as rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// ℤ/n with index = residue.
    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n > 0);
        let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        GroupTable { order: n, mult, inv, names: None }
    }

    pub fn trivial() -> GroupTable {
        GroupTable::cyclic(1)
    }

    fn from_trusted(order: usize, mult: Vec<usize>) -> GroupTable {
        let mut inv = vec![0; order];
        for a in 0..order {
            inv[a] = (0..order).find(|&b| mult[a * order + b] == 0).expect("trusted table");
        }
        GroupTable { order, mult, inv, names: None }
    }
}

/// Validates a multiplication table and computes inverses.
pub fn group_from_table(order: usize, mult: &[Vec<usize>]) -> Result<GroupTable> {
    let fail = |check: &str, w: Vec<usize>, d: &str| Err(Error::Group(Failure::new(check, w, d)));
    if order == 0 {
        return Err(Error::format("group order must be positive"));
    }
    if mult.len() != order || mult.iter().any(|r| r.len() != order) {
        return Err(Error::format(format!("multiplication table is not {order}×{order}")));
    }
    if let Some((a, b)) = (0..order)
        .flat_map(|a| (0..order).map(move |b| (a, b)))
        .find(|&(a, b)| mult[a][b] >= order)
    {
        return Err(Error::format(format!("entry ({a},{b}) out of range")));
    }
    for g in 0..order {
        if mult[0][g] != g || mult[g][0] != g {
            return fail("identity", vec![g], "index 0 is not a two-sided identity");
        }
    }
    let mut inv = vec![0; order];
    for g in 0..order {
        match (0..order).find(|&h| mult[g][h] == 0 && mult[h][g] == 0) {
            Some(h) => inv[g] = h,
            None => return fail("inverse", vec![g], "no two-sided inverse"),
        }
    }
    for a in 0..order {
        for b in 0..order {
            let ab = mult[a][b];
            for c in 0..order {
                if mult[ab][c] != mult[a][mult[b][c]] {
                    return fail("associativity", vec![a, b, c], "(ab)c != a(bc)");
                }
            }
        }
    }
    Ok(GroupTable { order, mult: mult.concat(), inv, names: None })
}

/// `(p ∘ q)(i) = p(q(i))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

/// Breadth-first closure of the generators, returning the element
/// permutations in index order.
pub fn permutation_closure(degree: usize, generators: &[Vec<usize>], bound: usize) -> Result<Vec<Vec<usize>>> {
    for (k, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::format(format!("generator {k} is not a permutation of 0..{degree}")));
        }
    }
    let id: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = compose(&elements[x], s);
            if !index.contains_key(&y) {
                if elements.len() == bound {
                    return Err(Error::TooLarge { order: bound + 1, limit: bound });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

/// Cycle notation such as `(0 1 2)`; the identity prints as `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![];
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cyc.push(i.to_string());
            i = p[i];
        }
        out.push_str(&format!("({})", cyc.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

pub fn group_from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<GroupTable> {
    group_from_permutations_bounded(degree, generators, DEFAULT_CLOSURE_BOUND)
}

pub fn group_from_permutations_bounded(
    degree: usize,
    generators: &[Vec<usize>],
    bound: usize,
) -> Result<GroupTable> {
    let elements = permutation_closure(degree, generators, bound)?;
    let index: HashMap<&[usize], usize> =
        elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = elements.len();
    let mut mult = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            mult.push(index[compose(a, b).as_slice()]);
        }
    }
    let names = elements.iter().map(|p| cycle_notation(p)).collect();
    GroupTable::from_trusted(n, mult).with_names(names)
}

/// `G1 × G2` with index `i·|G2| + j`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable) -> GroupTable {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push(g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2));
        }
    }
    let inv = (0..n).map(|a| g1.inv(a / n2) * n2 + g2.inv(a % n2)).collect();
    let names = match (&g1.names, &g2.names) {
        (None, None) => None,
        _ => Some((0..n).map(|a| format!("({},{})", g1.name(a / n2), g2.name(a % n2))).collect()),
    };
    GroupTable { order: n, mult, inv, names }
}

/// Smallest subgroup containing `elements`, sorted.
pub fn subgroup_closure(g: &GroupTable, elements: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut members = vec![0];
    let mut frontier: Vec<usize> = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in elements {
            let y = g.mul(x, s);
            if !inside[y] {
                inside[y] = true;
                members.push(y);
                frontier.push(y);
            }
        }
    }
    members.sort_unstable();
    members
}

/// Whether the sorted list is closed under products and inverses and holds `e`.
pub fn is_subgroup(g: &GroupTable, elements: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &x in elements {
        if x >= g.order() {
            return false;
        }
        inside[x] = true;
    }
    inside[0]
        && elements.iter().all(|&a| inside[g.inv(a)] && elements.iter().all(|&b| inside[g.mul(a, b)]))
}

pub fn centralizer(g: &GroupTable, a: usize) -> Vec<usize> {
    (0..g.order()).filter(|&s| g.mul(s, a) == g.mul(a, s)).collect()
}

/// Conjugacy classes with the canonical choices of representative and
/// transporter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub classes: Vec<Vec<usize>>,
    /// `class_of[g]` is the index of the class containing `g`.
    pub class_of: Vec<usize>,
    /// `rep[c]` is `g_C`, the smallest index in class `c`.
    pub rep: Vec<usize>,
    /// `transport[g]` is `w_g`, the first `x` with `x g_C x⁻¹ = g`.
    pub transport: Vec<usize>,
    /// `centralizers[c]` is `G_{g_C}`, sorted.
    pub centralizers: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Position of `g` inside its class list.
    pub fn position(&self, g: usize) -> usize {
        let c = self.class_of[g];
        self.classes[c].binary_search(&g).expect("element in its own class")
    }
}

pub fn conjugacy_data(g: &GroupTable) -> ClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut transport = vec![usize::MAX; n];
    let mut classes = vec![];
    let mut rep = vec![];
    let mut centralizers = vec![];
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = vec![];
        for x in 0..n {
            let b = g.conj(x, a);
            if transport[b] == usize::MAX {
                transport[b] = x;
                class_of[b] = c;
                members.push(b);
            }
        }
        members.sort_unstable();
        classes.push(members);
        rep.push(a);
        centralizers.push(centralizer(g, a));
    }
    ClassData { classes, class_of, rep, transport, centralizers }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupTable {
        group_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn table_validation() {
        assert_eq!(group_from_table(1, &[vec![0]]).unwrap().order(), 1);
        let z4: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        assert_eq!(group_from_table(4, &z4).unwrap().inv(1), 3);
        let err = group_from_table(2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err.failure().unwrap().check, "inverse");
        assert_eq!(err.failure().unwrap().witness, vec![1]);
    }

    #[test]
    fn nonassociative_table_has_witness() {
        // Latin square with identity 0 that is not a group (order 5 loop).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = group_from_table(5, &t).unwrap_err();
        assert_eq!(err.failure().unwrap().check, "associativity");
    }

    #[test]
    fn permutation_closure_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(group_from_permutations(3, &[]).unwrap().order(), 1);
        assert_eq!(group_from_permutations(3, &[vec![1, 0, 2]]).unwrap().order(), 2);
        let err = group_from_permutations_bounded(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], 10);
        assert!(matches!(err, Err(Error::TooLarge { .. })));
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        let cd = conjugacy_data(&g);
        let mut sizes: Vec<usize> = cd.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        for (c, cl) in cd.classes.iter().enumerate() {
            assert_eq!(cl.len() * cd.centralizers[c].len(), 6);
            assert_eq!(cd.transport[cd.rep[c]], 0);
            for &x in cl {
                assert_eq!(g.conj(cd.transport[x], cd.rep[c]), x);
            }
        }
    }

    #[test]
    fn products_and_closures() {
        let z2 = GroupTable::cyclic(2);
        let v4 = direct_product(&z2, &z2);
        assert!((0..4).all(|a| v4.inv(a) == a));
        let z6 = direct_product(&z2, &GroupTable::cyclic(3));
        assert!((0..6).any(|a| z6.element_order(a) == 6));
        assert_eq!(subgroup_closure(&GroupTable::cyclic(4), &[1]), vec![0, 1, 2, 3]);
        assert_eq!(subgroup_closure(&GroupTable::cyclic(4), &[0]), vec![0]);
        let g = s3();
        assert_eq!(subgroup_closure(&g, &[1, 2]).len(), 6);
        assert_eq!(centralizer(&g, 1).len(), 2);
    }
}
