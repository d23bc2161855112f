use harris::enumeration::{
    resume_order, run_census, write_catalog, write_summary, CensusCheckpoint, CensusConfig,
    CensusRun, CENSUS_HARD_MAX_ORDER, CENSUS_MAX_ORDER, CENSUS_MIN_ORDER,
};

use crate::failure::Failure;
use crate::EnumerateArgs;

pub fn run(args: &EnumerateArgs) -> Result<(), Failure> {
    let n = args.n;
    if n < CENSUS_MIN_ORDER {
        return Err(Failure::usage(format!("order must be at least {CENSUS_MIN_ORDER}")));
    }
    if n > CENSUS_HARD_MAX_ORDER {
        return Err(Failure::usage(format!(
            "order {n} is above the census ceiling of {CENSUS_HARD_MAX_ORDER}"
        )));
    }
    if n > CENSUS_MAX_ORDER && !args.force {
        return Err(Failure::usage(format!(
            "order {n} is above the default ceiling of {CENSUS_MAX_ORDER}; pass --force to run it anyway"
        )));
    }
    let threads = match args.threads {
        Some(0) => return Err(Failure::usage("--threads must be at least 1")),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |p| p.get()),
    };
    let config = CensusConfig {
        threads,
        checkpoint: args.checkpoint.clone(),
        stop_after_units: args.stop_after_units,
        allow_beyond_ceiling: args.force,
        ..CensusConfig::default()
    };

    let run = match &args.checkpoint {
        Some(path) if path.exists() => {
            let cp = CensusCheckpoint::load(path)?;
            eprintln!(
                "resuming order {n} from {} ({} of {} units done)",
                path.display(),
                cp.completed.len(),
                cp.total_units()
            );
            resume_order(n, cp, &config)?
        }
        _ => run_census(n, &config)?,
    };
    match run {
        CensusRun::Complete(result) => {
            let catalog = write_catalog(&args.out, &result)?;
            let summary = write_summary(&args.out, &result)?;
            println!("{}", result.harris_count);
            eprintln!(
                "order {n}: {} Harris graphs in {:.2}s; wrote {} and {}",
                result.harris_count,
                result.wall_time_secs,
                catalog.display(),
                summary.display()
            );
        }
        CensusRun::Interrupted(cp) => {
            eprintln!(
                "stopped after {} of {} units; rerun with the same --checkpoint to continue",
                cp.completed.len(),
                cp.total_units()
            );
        }
    }
    Ok(())
}
