//! Library surface of the CLI: sweep orchestration, record schema, and the
//! scaling fit, shared between the binary and the integration tests.

pub mod fit;
pub mod record;
pub mod sweep;
