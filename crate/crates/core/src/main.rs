use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use log::{error, info, warn};

use codepark::metrics::summary_table;
use codepark::scene::build_from_dir;
use codepark::server::{router, serve, AppState, SceneSource, DEFAULT_PORT};

/// Walkable 3D parks from C# codebases.
#[derive(Parser)]
#[command(name = "codepark", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a source tree and write the scene document.
    Build {
        dir: PathBuf,
        #[arg(short, long, default_value = "scene.json")]
        output: PathBuf,
    },
    /// Serve a source tree or a built scene over HTTP.
    Serve {
        /// Source directory or scene.json
        source: PathBuf,
        #[arg(long, env = "CODEPARK_PORT", default_value_t = DEFAULT_PORT)]
        port: u16,
        /// Where to persist room positions (default: beside the scene)
        #[arg(long)]
        arrangement: Option<PathBuf>,
        /// Directory holding the viewer's index.html and assets
        #[arg(long)]
        assets: Option<PathBuf>,
    },
    /// Print class count, total LoC and largest class LoC.
    Summary { dir: PathBuf },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { dir, output } => build(&dir, &output),
        Command::Summary { dir } => summary(&dir),
        Command::Serve {
            source,
            port,
            arrangement,
            assets,
        } => return run_server(source, port, arrangement, assets),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            error!("{e}");
            ExitCode::FAILURE
        }
    }
}

fn build(dir: &Path, output: &Path) -> codepark::error::Result<()> {
    let (scene, analysis) = build_from_dir(dir, None)?;
    for d in &analysis.diagnostics {
        warn!("{}", d.render(&analysis.codebase));
    }
    scene.write(output)?;
    info!(
        "wrote {} ({} rooms, {} LoC)",
        output.display(),
        scene.layout.rooms.len(),
        scene.summary.total_loc
    );
    Ok(())
}

fn summary(dir: &Path) -> codepark::error::Result<()> {
    let analysis = codepark::analysis::Analysis::run(codepark::model::Codebase::ingest(dir)?);
    let name = dir
        .canonicalize()
        .ok()
        .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        .unwrap_or_else(|| dir.display().to_string());
    print!("{}", summary_table(&name, &analysis.summary));
    Ok(())
}

fn run_server(source: PathBuf, port: u16, arrangement: Option<PathBuf>, assets: Option<PathBuf>) -> ExitCode {
    let source = SceneSource::from_path(source);
    let scene = match source.load() {
        Ok(s) => s,
        Err(e) => {
            error!("{e}");
            return ExitCode::FAILURE;
        }
    };
    let arrangement = arrangement.unwrap_or_else(|| source.default_arrangement_path());
    let state = Arc::new(AppState::new(scene, arrangement));
    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            error!("cannot start runtime: {e}");
            return ExitCode::FAILURE;
        }
    };
    runtime.block_on(async move {
        let listener = match tokio::net::TcpListener::bind(("127.0.0.1", port)).await {
            Ok(l) => l,
            Err(e) if e.kind() == std::io::ErrorKind::AddrInUse => {
                error!("port {port} is already in use");
                return ExitCode::from(2);
            }
            Err(e) => {
                error!("cannot listen on port {port}: {e}");
                return ExitCode::FAILURE;
            }
        };
        info!("serving on http://127.0.0.1:{port}/");
        match serve(listener, router(state, assets)).await {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                error!("{e}");
                ExitCode::FAILURE
            }
        }
    })
}
