use crate::simplicial::SimplicialComplex;

/// A square complex given by vertex heights and squares listed as
/// 4-cycles of vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareConfiguration {
    pub heights: Vec<u64>,
    pub squares: Vec<[usize; 4]>,
    pub apex: usize,
}

/// Three squares around `apex` pairwise sharing an edge: the obstruction to
/// a nonpositively curved cube structure when the cube they would bound is
/// absent.
///
/// Vertex 0 has height 3, its neighbours 1, 2, 3 have height 2 and the far
/// corners 4, 5, 6 have height 1. The missing cube's remaining vertex would
/// need height 0, and no surface has that height.
pub fn three_square_configuration() -> SquareConfiguration {
    SquareConfiguration { heights: vec![3, 2, 2, 2, 1, 1, 1], squares: vec![[0, 1, 4, 2], [0, 2, 5, 3], [0, 3, 6, 1]], apex: 0 }
}

impl SquareConfiguration {
    /// Vertex link: one vertex per edge at `vertex`, one edge per square
    /// corner at `vertex`. Link vertices are labelled by the other endpoint.
    pub fn link(&self, vertex: usize) -> SimplicialComplex {
        let edges = self.squares.iter().filter_map(|sq| {
            let at = sq.iter().position(|&v| v == vertex)?;
            Some(vec![sq[(at + 1) % 4], sq[(at + 3) % 4]])
        });
        SimplicialComplex::from_simplices(edges)
    }

    /// Height of the vertex opposite `apex` in a cube spanned by its
    /// squares, if it were present; each edge drops height by one.
    pub fn completion_height(&self) -> i64 {
        self.heights[self.apex] as i64 - 3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn link_is_a_hollow_triangle() {
        let c = three_square_configuration();
        let link = c.link(c.apex);
        assert_eq!(link.facets().len(), 3);
        assert_eq!(link.dimension(), 1);
        assert!(!link.is_flag());
        assert_eq!(link.reduced_homology().unwrap().betti, vec![0, 1]);
        assert_eq!(c.completion_height(), 0);
    }

    #[test]
    fn squares_descend_from_the_apex() {
        let c = three_square_configuration();
        for sq in &c.squares {
            assert_eq!(c.heights[sq[0]], 3);
            assert_eq!(c.heights[sq[1]], 2);
            assert_eq!(c.heights[sq[2]], 1);
            assert_eq!(c.heights[sq[3]], 2);
        }
    }
}
