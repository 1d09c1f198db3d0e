#include "rstirling/figures.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rstirling/bounds.hpp"
#include "rstirling/exact.hpp"
#include "rstirling/stirling.hpp"

namespace rstirling {

FigureSpec FigureSpec::defaults(int figure_id) {
    FigureSpec spec;
    spec.figure_id = figure_id;
    switch (figure_id) {
        case 1:
            spec.p_min = 2;
            spec.p_max = 50;
            spec.m_min = 2;
            spec.m_max = 50;
            break;
        case 2:
            spec.p_min = 1;
            spec.p_max = 50;
            spec.m_min = 1;
            spec.m_max = 50;
            break;
        case 3:
            spec.p_min = 1;
            spec.p_max = 100;
            break;
        case 4:
            spec.p_min = 1;
            spec.p_max = 150;
            break;
        default:
            throw std::invalid_argument("figure id must be 1..4");
    }
    spec.output_path = "figure" + std::to_string(figure_id) + ".csv";
    return spec;
}

namespace {

void validate(const FigureSpec& spec) {
    if (spec.figure_id < 1 || spec.figure_id > 4) {
        throw std::invalid_argument("figure id must be 1..4");
    }
    if (spec.p_min == 0 || spec.m_min == 0) {
        throw std::invalid_argument("figure grid limits must be positive");
    }
    if (spec.p_min > spec.p_max || spec.m_min > spec.m_max) {
        throw std::invalid_argument("figure grid limits must satisfy min <= max");
    }
}

// ln of a positive exact value, or nothing when the log is undefined
std::optional<double> log_or_na(const ExactRational& v) {
    if (!(ExactRational(0) < v)) {
        return std::nullopt;
    }
    return to_log(v).ln_magnitude;
}

std::string cell(const std::optional<double>& v) {
    return v ? decimal12(*v) : "NA";
}

std::string diff_cell(const std::optional<double>& a, const std::optional<double>& b) {
    if (!a || !b) {
        return "NA";
    }
    return decimal12(*a - *b);
}

void emit_figure1(std::ostringstream& os, const FigureSpec& spec) {
    os << "m,p,log_L,log_Lrd,diff\n";
    for (std::uint64_t m = spec.m_min; m <= spec.m_max; ++m) {
        const std::uint64_t p_start = std::max(spec.p_min, m + 1);  // grid keeps m < p
        for (std::uint64_t p = p_start; p <= spec.p_max; ++p) {
            const BoundReport rep = stirling_bounds(StirlingQuery{1, p, m});
            const auto log_l = log_or_na(rep.combined_L);
            const auto log_lrd = log_or_na(*rep.rd_lower);
            os << m << ',' << p << ',' << cell(log_l) << ',' << cell(log_lrd) << ','
               << diff_cell(log_l, log_lrd) << '\n';
        }
    }
}

void emit_figure2(std::ostringstream& os, const FigureSpec& spec) {
    os << "m,p,log_S,log_L,log_U,gap_lower,gap_upper\n";
    for (std::uint64_t m = spec.m_min; m <= spec.m_max; ++m) {
        for (std::uint64_t p = std::max(spec.p_min, m); p <= spec.p_max; ++p) {
            const BoundReport rep = stirling_bounds(StirlingQuery{1, p, m});
            const auto log_s = log_or_na(ExactRational(rep.exact));
            const auto log_l = log_or_na(rep.combined_L);
            const auto log_u = log_or_na(rep.combined_U);
            os << m << ',' << p << ',' << cell(log_s) << ',' << cell(log_l) << ','
               << cell(log_u) << ',' << diff_cell(log_s, log_l) << ','
               << diff_cell(log_u, log_s) << '\n';
        }
    }
}

void emit_figure3(std::ostringstream& os, const FigureSpec& spec) {
    os << "p,log_Ubt,log_U,diff\n";
    for (std::uint64_t p = spec.p_min; p <= spec.p_max; ++p) {
        const std::optional<double> log_ubt = berend_tassa(p).ln_magnitude;
        const auto log_u = log_or_na(bell_upper(p));
        os << p << ',' << cell(log_ubt) << ',' << cell(log_u) << ','
           << diff_cell(log_ubt, log_u) << '\n';
    }
}

void emit_figure4(std::ostringstream& os, const FigureSpec& spec) {
    os << "p,ratio\n";
    for (std::uint64_t p = spec.p_min; p <= spec.p_max; ++p) {
        const ExactRational ratio = bell_upper(p) / ExactRational(bell(p));
        os << p << ',' << decimal12(ratio) << '\n';
    }
}

}  // namespace

std::string figure_csv_text(const FigureSpec& spec) {
    validate(spec);
    std::ostringstream os;
    switch (spec.figure_id) {
        case 1:
            emit_figure1(os, spec);
            break;
        case 2:
            emit_figure2(os, spec);
            break;
        case 3:
            emit_figure3(os, spec);
            break;
        default:
            emit_figure4(os, spec);
            break;
    }
    return os.str();
}

void write_figure_csv(const FigureSpec& spec) {
    const std::string text = figure_csv_text(spec);
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + spec.output_path);
    }
    out << text;
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + spec.output_path);
    }
}

}  // namespace rstirling
