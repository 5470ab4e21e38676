//! Suffix array and Lyndon array construction by induced sorting.
//!
//! The crate computes both arrays of a byte text in one pass: the suffix
//! array is built with the constant-workspace induced-sorting algorithm
//! (one 256-entry bucket array beyond the output buffer, recursion runs
//! entirely inside the output buffer), and the Lyndon array is derived
//! during the final right-to-left induction sweep. Four strategies for
//! that derivation are provided, trading working space for bookkeeping:
//!
//! | variant     | extra words | time          |
//! |-------------|-------------|---------------|
//! | `Naive`     | 0           | O(n · avelyn) |
//! | `NextPrev`  | 2n          | O(n)          |
//! | `SingleAux` | n           | O(n)          |
//! | `Inplace`   | 0           | O(n)          |
//!
//! All positions in the public API are 1-based; the appended sentinel
//! (byte 0) occupies position n.
//!
//! ```
//! use lynsa::{Text, LyndonVariant};
//!
//! let text = Text::from_bytes(b"banana").unwrap();
//! let (sa, la) = lynsa::suffix_and_lyndon(&text, LyndonVariant::Inplace);
//! assert_eq!(sa.as_slice(), &[7, 6, 4, 2, 1, 5, 3]);
//! assert_eq!(la.as_slice(), &[1, 2, 1, 2, 1, 1, 1]);
//! ```

pub mod alloc;
pub mod lyndon;
pub mod oracles;
pub mod sacak;
pub mod types;

pub use lyndon::{lyndon_array, lyndon_into, suffix_and_lyndon, LyndonVariant};
pub use sacak::{lms_positions, sort_into, sort_suffixes};
pub use types::{
    bucket_bounds, classify, BucketArray, BucketMode, Index, InverseSuffixArray, LyndonArray,
    SuffixArray, SuffixKind, Text, TextError, TypeMap,
};
