pub mod catalog;
pub mod checks;
pub mod classes;
pub mod constructions;
pub mod corpus;
pub mod cyclic;
pub mod error;
pub mod graphs;
pub mod matroid;
pub mod io;
pub mod minors;
pub mod report;
pub mod subset;
