pub mod coord;
pub mod decomp;
pub mod fock;
pub mod indexsets;
pub mod oracle;
pub mod ring;
