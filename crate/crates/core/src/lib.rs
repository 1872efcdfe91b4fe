//! Circular words over an ordered alphabet: tuple and iterative
//! representations, conjugate tries, and checks on finite Fibonacci words.
//!
//! ```
//! use circword_core::{greedy_encode, optimal_encode, CircularWord};
//!
//! let cw: CircularWord = "ababaa".parse().unwrap();
//! assert_eq!(greedy_encode(&cw).to_string(), "ab,3,0,4,0,6");
//! assert_eq!(optimal_encode(&cw, 24).unwrap().to_string(), "ab,5,0,6");
//! ```

pub mod circular;
pub mod error;
pub mod fibonacci;
pub mod iterative;
pub mod trie;
pub mod verify;
pub mod word;

pub use circular::{border_reduce, is_representation, CircularWord, Representation};
pub use error::{Error, Result};
pub use fibonacci::{fib_word, is_fib_number, squares_in, FibIndex};
pub use iterative::{greedy_encode, greedy_refine, optimal_encode, IterativeRepresentation};
pub use trie::{build_trie, BranchingProfile, ConjugateTrie};
pub use word::Word;
