#pragma once

#include <cstdint>
#include <string>

namespace rstirling {

/// Grid and output location for one of the four CSV data sets.
struct FigureSpec {
    int figure_id = 1;  // 1..4
    std::uint64_t p_min = 1;
    std::uint64_t p_max = 1;
    std::uint64_t m_min = 1;
    std::uint64_t m_max = 1;
    std::string output_path;

    static FigureSpec defaults(int figure_id);
};

/// The CSV content for a figure spec. Deterministic: equal specs produce
/// identical bytes. Cells whose log argument is not positive hold "NA".
///
///   figure 1: m,p,log_L,log_Lrd,diff           (2 <= m < p <= 50)
///   figure 2: m,p,log_S,log_L,log_U,gap_lower,gap_upper  (1 <= m <= p <= 50)
///   figure 3: p,log_Ubt,log_U,diff             (1 <= p <= 100)
///   figure 4: p,ratio                          (1 <= p <= 150)
std::string figure_csv_text(const FigureSpec& spec);

/// Writes figure_csv_text to spec.output_path (LF endings, UTF-8).
/// Grid problems raise std::invalid_argument; unwritable paths raise
/// std::runtime_error.
void write_figure_csv(const FigureSpec& spec);

}  // namespace rstirling
