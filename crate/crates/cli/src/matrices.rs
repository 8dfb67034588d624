use neutro_core::Result;

use crate::input::read_matrix;
use crate::report::Report;
use crate::MatrixCommand;

pub fn run(cmd: &MatrixCommand) -> Result<Report> {
    let mut report = Report::new();
    match cmd {
        MatrixCommand::Mul { a, b } => {
            let product = read_matrix(a)?.mul(&read_matrix(b)?)?;
            report.line("shape", format!("{}x{}", product.rows(), product.cols()));
            report.text("product", &product.to_text());
        }
        MatrixCommand::Rank { a } => {
            let m = read_matrix(a)?;
            let rank = m.rank();
            report.line("shape", format!("{}x{}", m.rows(), m.cols()));
            report.line("rank_first", rank.rank_first);
            report.line("rank_second", rank.rank_second);
            report.line("invertible", rank.invertible);
        }
        MatrixCommand::Transpose { a } => {
            let t = read_matrix(a)?.transpose();
            report.line("shape", format!("{}x{}", t.rows(), t.cols()));
            report.text("transpose", &t.to_text());
        }
    }
    Ok(report)
}
