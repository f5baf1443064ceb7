//! Command implementations for the `platcover` binary.

pub mod catalog;
pub mod input;
pub mod report;

use platcover::ErrorKind;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const PRECONDITION: u8 = 2;
    pub const INTERNAL: u8 = 3;
}

/// Maps an error chain to an exit code: library errors by kind, anything
/// else (I/O, JSON syntax, bad arguments) as a usage error.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<platcover::Error>()) {
        Some(e) => match e.kind() {
            ErrorKind::Parse => exit::USAGE,
            ErrorKind::Precondition => exit::PRECONDITION,
            ErrorKind::Internal => exit::INTERNAL,
        },
        None => exit::USAGE,
    }
}
