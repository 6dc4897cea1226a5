pub mod analysis;
pub mod canonical;
pub mod error;
pub mod layout;
pub mod lexer;
pub mod metrics;
pub mod model;
pub mod parser;
pub mod resolver;
pub mod scene;
pub mod server;
pub mod wallpaper;
