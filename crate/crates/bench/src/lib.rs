//! Shared fixtures for the criterion benches; nothing here ships.
