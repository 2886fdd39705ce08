//! Colorings, list assignments and vertex partitions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::digraph::{check_vertex, is_acyclic, Digraph};
use crate::error::GraphError;
use crate::Color;

/// A partial or total map from vertices to colors.
///
/// Serialized as `{"colors": [c_or_null, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn new(colors: Vec<Option<Color>>) -> Self {
        Self { colors }
    }

    /// All `n` vertices uncolored.
    pub fn uncolored(n: usize) -> Self {
        Self {
            colors: vec![None; n],
        }
    }

    pub fn from_total(colors: Vec<Color>) -> Self {
        Self {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, color: Option<Color>) {
        self.colors[v] = color;
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    /// The plain color vector, or the first uncolored vertex.
    pub fn as_total(&self) -> Result<Vec<Color>, usize> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(v))
            .collect()
    }

    /// Vertices grouped by color, each class in ascending order.
    pub fn color_classes(&self) -> BTreeMap<Color, Vec<usize>> {
        let mut classes: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                classes.entry(*c).or_default().push(v);
            }
        }
        classes
    }

    pub fn distinct_colors(&self) -> usize {
        self.color_classes().len()
    }
}

/// Per-vertex color lists. `k` is the size of the smallest list.
///
/// Serialized as `{"k": <int>, "lists": [[c, ...], ...]}`; lists are stored
/// sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLists")]
pub struct ListAssignment {
    k: usize,
    lists: Vec<Vec<Color>>,
}

#[derive(Deserialize)]
struct RawLists {
    k: usize,
    lists: Vec<Vec<Color>>,
}

impl TryFrom<RawLists> for ListAssignment {
    type Error = GraphError;

    fn try_from(raw: RawLists) -> Result<Self, Self::Error> {
        let lists = ListAssignment::new(raw.lists)?;
        if lists.k != raw.k {
            return Err(GraphError::ListSizeMismatch {
                declared: raw.k,
                actual: lists.k,
            });
        }
        Ok(lists)
    }
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<Color>>) -> Result<Self, GraphError> {
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(GraphError::EmptyList { vertex: v });
            }
        }
        let k = lists.iter().map(Vec::len).min().unwrap_or(0);
        Ok(Self { k, lists })
    }

    /// Every vertex receives the same list.
    pub fn uniform(n: usize, colors: &[Color]) -> Result<Self, GraphError> {
        Self::new(vec![colors.to_vec(); n])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn contains(&self, v: usize, color: Color) -> bool {
        self.lists[v].binary_search(&color).is_ok()
    }

    /// Sorted union of all lists.
    pub fn universe(&self) -> Vec<Color> {
        let mut all: Vec<Color> = self.lists.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Checks that the assignment covers exactly `n` vertices.
    pub fn check_len(&self, n: usize) -> Result<(), GraphError> {
        if self.len() == n {
            Ok(())
        } else {
            Err(GraphError::LengthMismatch {
                expected: n,
                found: self.len(),
            })
        }
    }
}

/// Disjoint acyclic vertex classes covering the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicPartition {
    classes: Vec<Vec<usize>>,
}

impl AcyclicPartition {
    /// Validates that `classes` partition `V(d)` into acyclic sets.
    pub fn new(d: &Digraph, classes: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let class_of = class_index(d.vertex_count(), &classes)?;
        debug_assert_eq!(class_of.len(), d.vertex_count());
        for (i, class) in classes.iter().enumerate() {
            if !is_acyclic(d, class)? {
                return Err(GraphError::CyclicClass { class: i });
            }
        }
        Ok(Self { classes })
    }

    /// The partition induced by the color classes of a valid total coloring.
    pub fn from_coloring(d: &Digraph, coloring: &Coloring) -> Result<Self, GraphError> {
        Self::new(d, coloring.color_classes().into_values().collect())
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `class_of()[v]` is the index of the class holding `v`.
    pub fn class_of(&self) -> Vec<usize> {
        let n = self.classes.iter().map(Vec::len).sum();
        class_index(n, &self.classes).expect("validated on construction")
    }
}

/// Two sides covering the vertex set such that every arc crosses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    side1: Vec<usize>,
    side2: Vec<usize>,
}

impl Bipartition {
    pub fn new(d: &Digraph, side1: Vec<usize>, side2: Vec<usize>) -> Result<Self, GraphError> {
        let side_of = class_index(d.vertex_count(), &[side1.clone(), side2.clone()])?;
        if let Some((u, v)) = d.arcs().find(|&(u, v)| side_of[u] == side_of[v]) {
            return Err(GraphError::ArcWithinSide { from: u, to: v });
        }
        Ok(Self { side1, side2 })
    }

    /// Derives a bipartition from the underlying graph, if it is bipartite.
    pub fn detect(d: &Digraph) -> Option<Self> {
        let (side1, side2) = d.underlying_graph().two_coloring()?;
        Some(Self { side1, side2 })
    }

    pub fn side1(&self) -> &[usize] {
        &self.side1
    }

    pub fn side2(&self) -> &[usize] {
        &self.side2
    }

    /// The two sides as a two-class acyclic partition (each side spans no
    /// arcs, so it is trivially acyclic).
    pub fn as_partition(&self) -> AcyclicPartition {
        AcyclicPartition {
            classes: vec![self.side1.clone(), self.side2.clone()],
        }
    }
}

fn class_index(n: usize, classes: &[Vec<usize>]) -> Result<Vec<usize>, GraphError> {
    let mut class_of = vec![usize::MAX; n];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            check_vertex(v, n)?;
            if class_of[v] != usize::MAX {
                return Err(GraphError::NotAPartition(format!(
                    "vertex {v} appears more than once"
                )));
            }
            class_of[v] = i;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(GraphError::NotAPartition(format!(
            "vertex {v} is not covered"
        )));
    }
    Ok(class_of)
}
