//! Library side of the `lrwkit` command: closed-form oracles, the example
//! verification suite and run configuration.

pub mod closed_form;
pub mod config;
pub mod verify;

pub use closed_form::{closed_form_24, closed_form_abc, closed_form_rectangle};
pub use config::Config;
pub use verify::{run_verify_suite, Level, VerifyReport};
