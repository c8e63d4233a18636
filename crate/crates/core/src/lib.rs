//! Principal left and right ideal graphs of finite semigroups, their
//! skeletal quotients, and exact checks of the combinatorial and spectral
//! facts about them.

pub mod constructors;
pub mod error;
pub mod graph;
pub mod green;
pub mod iso;
pub mod partition;
pub mod pig;
pub mod random;
pub mod semigroup;
pub mod skeletal;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use green::Side;
pub use partition::Partition;
pub use semigroup::Semigroup;
pub use skeletal::VertexMap;
