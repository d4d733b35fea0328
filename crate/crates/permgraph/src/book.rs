#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/permutations.md")]
mod permutations {}
#[doc = include_str!("../../../book/src/graphs.md")]
mod graphs {}
#[doc = include_str!("../../../book/src/inversion-graphs.md")]
mod inversion_graphs {}
#[doc = include_str!("../../../book/src/prime-structure.md")]
mod prime_structure {}
#[doc = include_str!("../../../book/src/letter-graphs.md")]
mod letter_graphs {}
#[doc = include_str!("../../../book/src/grid-classes.md")]
mod grid_classes {}
#[doc = include_str!("../../../book/src/permutation-letter-graphs.md")]
mod permutation_letter_graphs {}
#[doc = include_str!("../../../book/src/reflections.md")]
mod reflections {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
