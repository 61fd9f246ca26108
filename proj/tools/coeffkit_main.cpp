#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "coeffkit/errors.hpp"
#include "coeffkit/oracle.hpp"
#include "coeffkit/polyops.hpp"
#include "coeffkit/relations.hpp"
#include "coeffkit/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace coeffkit;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;

enum class Format { text, csv, json_object };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json_object}};

void add_format_flag(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "output format: text, csv, or json")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->default_str("text");
}

bool color_enabled() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string colored(const std::string& text, const char* code) {
    if (!color_enabled())
        return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

void emit_json(const std::string& command, const json& inputs, const json& result) {
    json envelope{{"command", command}, {"inputs", inputs}, {"result", result}};
    std::cout << envelope.dump() << "\n";
}

std::string join_values(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

double to_ms(std::chrono::nanoseconds d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

// --- triangle ---------------------------------------------------------------

struct TriangleOptions {
    std::uint64_t power = 0;
    std::uint64_t rows = 0;
    Format format = Format::text;
};

int run_triangle(const TriangleOptions& opt) {
    std::vector<UniqueRow> triangle;
    triangle.reserve(opt.rows);
    for (std::uint64_t r = 1; r <= opt.rows; ++r)
        triangle.push_back(relations::unique_row_closed(opt.power, r));

    switch (opt.format) {
    case Format::text: {
        std::vector<std::string> lines;
        std::size_t widest = 0;
        for (const auto& row : triangle) {
            lines.push_back(join_values(row.values));
            widest = std::max(widest, lines.back().size());
        }
        for (const auto& line : lines)
            std::cout << std::string((widest - line.size()) / 2, ' ') << line << "\n";
        break;
    }
    case Format::csv: {
        std::cout << "l,r,k,value\n";
        for (const auto& row : triangle) {
            for (std::size_t k = 0; k < row.values.size(); ++k)
                std::cout << row.power << ',' << row.row << ',' << k + 1 << ','
                          << row.values[k] << "\n";
        }
        break;
    }
    case Format::json_object: {
        json rows = json::array();
        for (const auto& row : triangle)
            rows.push_back(row.values);
        emit_json("triangle",
                  {{"l", opt.power}, {"rows", opt.rows}, {"format", "json"}}, rows);
        break;
    }
    }
    return kExitOk;
}

// --- unique (one row) -------------------------------------------------------

struct UniqueOptions {
    std::uint64_t power = 0;
    std::uint64_t row = 0;
    Format format = Format::text;
};

int run_unique(const UniqueOptions& opt) {
    const UniqueRow row = relations::unique_row_closed(opt.power, opt.row);
    switch (opt.format) {
    case Format::text:
        std::cout << join_values(row.values) << "\n";
        break;
    case Format::csv:
        std::cout << "l,r,k,value\n";
        for (std::size_t k = 0; k < row.values.size(); ++k)
            std::cout << row.power << ',' << row.row << ',' << k + 1 << ',' << row.values[k]
                      << "\n";
        break;
    case Format::json_object:
        emit_json("unique", {{"l", opt.power}, {"row", opt.row}, {"format", "json"}},
                  row.values);
        break;
    }
    return kExitOk;
}

// --- coeff ------------------------------------------------------------------

struct CoeffOptions {
    std::uint64_t degree = 0;
    std::uint64_t power = 0;
    std::uint64_t target = 0;
    Format format = Format::text;
};

int run_coeff(const CoeffOptions& opt) {
    const std::uint64_t value =
        oracle::bounded_composition_count({opt.degree, opt.power}, opt.target);
    switch (opt.format) {
    case Format::text:
        std::cout << value << "\n";
        break;
    case Format::csv:
        std::cout << "n,l,m,value\n"
                  << opt.degree << ',' << opt.power << ',' << opt.target << ',' << value
                  << "\n";
        break;
    case Format::json_object:
        emit_json("coeff",
                  {{"n", opt.degree}, {"l", opt.power}, {"m", opt.target}, {"format", "json"}},
                  value);
        break;
    }
    return kExitOk;
}

// --- eval-relation ----------------------------------------------------------

struct EvalOptions {
    std::uint64_t power = 0;
    std::uint64_t row = 0;
    std::uint64_t pos = 0;
    Format format = Format::text;
};

int run_eval_relation(const EvalOptions& opt) {
    const std::uint64_t value = relations::unique_value(opt.power, opt.row, opt.pos);
    switch (opt.format) {
    case Format::text:
        std::cout << value << "\n";
        break;
    case Format::csv:
        std::cout << "l,r,k,value\n"
                  << opt.power << ',' << opt.row << ',' << opt.pos << ',' << value << "\n";
        break;
    case Format::json_object:
        emit_json("eval-relation",
                  {{"l", opt.power}, {"row", opt.row}, {"k", opt.pos}, {"format", "json"}},
                  value);
        break;
    }
    return kExitOk;
}

// --- product ----------------------------------------------------------------

struct ProductOptions {
    std::string poly_text;
    std::uint64_t degree = 0;
    std::uint64_t power = 0;
    std::uint64_t target = 0;
    Format format = Format::text;
};

int run_product(const ProductOptions& opt) {
    const polyops::IntPolynomial p = polyops::parse_polynomial(opt.poly_text);
    const std::int64_t value = polyops::coefficient_of_product(p, {opt.degree, opt.power},
                                                               opt.target);
    switch (opt.format) {
    case Format::text:
        std::cout << value << "\n";
        break;
    case Format::csv:
        std::cout << "n,l,m,value\n"
                  << opt.degree << ',' << opt.power << ',' << opt.target << ',' << value
                  << "\n";
        break;
    case Format::json_object:
        emit_json("product",
                  {{"poly", opt.poly_text},
                   {"n", opt.degree},
                   {"l", opt.power},
                   {"m", opt.target},
                   {"format", "json"}},
                  value);
        break;
    }
    return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyOptions {
    std::vector<std::uint64_t> powers;
    std::uint64_t max_row = 0;
    unsigned workers = 1;
    bool g4_increment_only = false;
    Format format = Format::text;
};

std::string join_powers(const std::vector<std::uint64_t>& powers) {
    std::string out;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(powers[i]);
    }
    return out;
}

int run_verify(const VerifyOptions& opt) {
    verify::Options options;
    options.powers = opt.powers;
    options.max_row = opt.max_row;
    options.workers = opt.workers;
    options.g4_form = opt.g4_increment_only ? relations::G4Form::increment_only
                                            : relations::G4Form::full;
    verify::Report report;
    try {
        report = verify::run(options);
    } catch (const OverflowError& e) {
        throw OverflowError("verify l=" + join_powers(opt.powers) + " rows 1.." +
                            std::to_string(opt.max_row) + ": " + e.what());
    }

    switch (opt.format) {
    case Format::text: {
        for (const auto& mm : report.mismatches)
            std::cout << "l=" << mm.power << " r=" << mm.row << " k=" << mm.pos << ": closed "
                      << mm.closed_value << ", oracle " << mm.oracle_value << "\n";
        const std::string verdict = report.ok() ? colored("OK", "32") : colored("MISMATCH", "31");
        std::cout << "verified l=" << join_powers(opt.powers) << " rows 1.." << opt.max_row
                  << ": " << verdict << " (" << report.mismatches.size() << " mismatches, "
                  << to_ms(report.elapsed) << " ms)\n";
        break;
    }
    case Format::csv:
        std::cout << "l,r,k,closed,oracle\n";
        for (const auto& mm : report.mismatches)
            std::cout << mm.power << ',' << mm.row << ',' << mm.pos << ',' << mm.closed_value
                      << ',' << mm.oracle_value << "\n";
        break;
    case Format::json_object: {
        json mismatches = json::array();
        for (const auto& mm : report.mismatches)
            mismatches.push_back({{"l", mm.power},
                                  {"r", mm.row},
                                  {"k", mm.pos},
                                  {"closed", mm.closed_value},
                                  {"oracle", mm.oracle_value}});
        json inputs{{"l", opt.powers},
                    {"max_row", opt.max_row},
                    {"workers", opt.workers},
                    {"format", "json"}};
        if (opt.g4_increment_only)
            inputs["g4_increment_only"] = true;
        emit_json("verify", inputs,
                  {{"checked_powers", opt.powers},
                   {"max_row", opt.max_row},
                   {"mismatches", mismatches},
                   {"elapsed_ms", to_ms(report.elapsed)},
                   {"ok", report.ok()}});
        break;
    }
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

// --- bench ------------------------------------------------------------------

struct BenchOptions {
    std::uint64_t power = 0;
    std::uint64_t max_row = 0;
    std::uint64_t reps = 1;
    Format format = Format::text;
};

struct BenchRow {
    std::uint64_t row;
    std::uint64_t closed_ns;
    std::uint64_t oracle_ns;
};

template <typename F>
std::uint64_t median_ns(std::uint64_t reps, F&& body) {
    std::vector<std::uint64_t> samples;
    samples.reserve(reps);
    for (std::uint64_t i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1)
        return samples[mid];
    return (samples[mid - 1] + samples[mid]) / 2;
}

int run_bench(const BenchOptions& opt) {
    if (opt.reps < 1)
        throw DomainError("reps must be >= 1");
    std::vector<BenchRow> table;
    table.reserve(opt.max_row);
    for (std::uint64_t r = 1; r <= opt.max_row; ++r) {
        volatile std::uint64_t sink = 0; // keep the timed calls observable
        const std::uint64_t closed = median_ns(opt.reps, [&] {
            sink = relations::unique_row_closed(opt.power, r).values.back();
        });
        const std::uint64_t oracle_ns = median_ns(opt.reps, [&] {
            sink = oracle::unique_row_oracle(opt.power, r).values.back();
        });
        (void)sink;
        table.push_back({r, closed, oracle_ns});
    }

    switch (opt.format) {
    case Format::text:
        std::cout << "l r closed_ns oracle_ns\n";
        for (const auto& row : table)
            std::cout << opt.power << ' ' << row.row << ' ' << row.closed_ns << ' '
                      << row.oracle_ns << "\n";
        break;
    case Format::csv:
        std::cout << "l,r,closed_ns,oracle_ns\n";
        for (const auto& row : table)
            std::cout << opt.power << ',' << row.row << ',' << row.closed_ns << ','
                      << row.oracle_ns << "\n";
        break;
    case Format::json_object: {
        json rows = json::array();
        for (const auto& row : table)
            rows.push_back({{"l", opt.power},
                            {"r", row.row},
                            {"closed_ns", row.closed_ns},
                            {"oracle_ns", row.oracle_ns}});
        emit_json("bench",
                  {{"l", opt.power},
                   {"max_row", opt.max_row},
                   {"reps", opt.reps},
                   {"format", "json"}},
                  rows);
        break;
    }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coefficients of (x^n+...+1)^l: triangles, closed forms, oracle checks"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    TriangleOptions triangle;
    auto* triangle_cmd =
        app.add_subcommand("triangle", "print rows of a unique-coefficient triangle");
    triangle_cmd->add_option("--l", triangle.power, "power (2..4)")->required();
    triangle_cmd->add_option("--rows", triangle.rows, "number of rows")->required();
    add_format_flag(triangle_cmd, triangle.format);
    triangle_cmd->callback([&] { exit_code = run_triangle(triangle); });

    UniqueOptions unique;
    auto* unique_cmd = app.add_subcommand("unique", "print one unique-coefficient row");
    unique_cmd->add_option("--l", unique.power, "power (2..4)")->required();
    unique_cmd->add_option("--row", unique.row, "row index (1-based)")->required();
    add_format_flag(unique_cmd, unique.format);
    unique_cmd->callback([&] { exit_code = run_unique(unique); });

    CoeffOptions coeff;
    auto* coeff_cmd =
        app.add_subcommand("coeff", "coefficient of x^m in (x^n+...+1)^l by composition count");
    coeff_cmd->add_option("--n", coeff.degree, "base polynomial degree")->required();
    coeff_cmd->add_option("--l", coeff.power, "power (>= 1)")->required();
    coeff_cmd->add_option("--m", coeff.target, "queried degree")->required();
    add_format_flag(coeff_cmd, coeff.format);
    coeff_cmd->callback([&] { exit_code = run_coeff(coeff); });

    EvalOptions eval;
    auto* eval_cmd =
        app.add_subcommand("eval-relation", "one triangle value by closed form");
    eval_cmd->add_option("--l", eval.power, "power (2..4)")->required();
    eval_cmd->add_option("--row", eval.row, "row index (1-based)")->required();
    eval_cmd->add_option("--k", eval.pos, "position within the row (1-based)")->required();
    add_format_flag(eval_cmd, eval.format);
    eval_cmd->callback([&] { exit_code = run_eval_relation(eval); });

    ProductOptions product;
    auto* product_cmd = app.add_subcommand(
        "product", "coefficient of x^m in poly * (x^n+...+1)^l");
    product_cmd->add_option("--poly", product.poly_text,
                            "polynomial, comma-separated ascending coefficients")
        ->required();
    product_cmd->add_option("--n", product.degree, "base polynomial degree")->required();
    product_cmd->add_option("--l", product.power, "power (>= 1)")->required();
    product_cmd->add_option("--m", product.target, "queried degree")->required();
    add_format_flag(product_cmd, product.format);
    product_cmd->callback([&] { exit_code = run_product(product); });

    VerifyOptions verify_opt;
    auto* verify_cmd =
        app.add_subcommand("verify", "compare closed-form rows against the oracle");
    verify_cmd->add_option("--l", verify_opt.powers, "powers to check, e.g. 2,3,4")
        ->required()
        ->delimiter(',');
    verify_cmd->add_option("--max-row", verify_opt.max_row, "highest row to check")->required();
    verify_cmd->add_option("--workers", verify_opt.workers, "worker pool size");
    verify_cmd
        ->add_flag("--g4-increment-only", verify_opt.g4_increment_only,
                   "evaluate power-4 rows without the edge term")
        ->group(""); // demonstration knob, hidden from help
    add_format_flag(verify_cmd, verify_opt.format);
    verify_cmd->callback([&] { exit_code = run_verify(verify_opt); });

    BenchOptions bench;
    auto* bench_cmd =
        app.add_subcommand("bench", "time closed-form row generation against the oracle");
    bench_cmd->add_option("--l", bench.power, "power (2..4)")->required();
    bench_cmd->add_option("--max-row", bench.max_row, "highest row to time")->required();
    bench_cmd->add_option("--reps", bench.reps, "repetitions per measurement")->required();
    add_format_flag(bench_cmd, bench.format);
    bench_cmd->callback([&] { exit_code = run_bench(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
