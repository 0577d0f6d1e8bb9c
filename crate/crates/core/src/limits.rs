/// Caps on the exhaustive searches. None of them is a hard limit of the
/// algorithms; they bound running time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Strands (or closure components) for sequence searches and the bracket.
    pub max_strands: usize,
    /// Faces for the exhaustive region-unknotting search.
    pub max_faces: usize,
    /// Faces for the exact isolate-region (independent set) search.
    pub max_isolate_faces: usize,
    /// Nullspace dimension for exhaustive coset enumeration.
    pub max_nullity: usize,
    /// Words visited by the Markov simplifier.
    pub budget: usize,
    /// Letters accepted by the bracket transfer.
    pub max_bracket_letters: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_strands: 9,
            max_faces: 14,
            max_isolate_faces: 96,
            max_nullity: 24,
            budget: 20_000,
            max_bracket_letters: 96,
        }
    }
}
