#include "cli.hpp"

#include "catlab/errors.hpp"
#include "catlab/image_lab.hpp"
#include "catlab/map_core.hpp"
#include "catlab/numeric.hpp"
#include "catlab/period_analysis.hpp"
#include "catlab/qualia.hpp"
#include "catlab/report_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace catlab::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::int64_t table_limit = 10000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_suffix() { return ".tmp-" + std::to_string(::getpid()); }

// Whole file or nothing: write a sibling temp file and rename over the target.
void write_file_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + temp_suffix();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + path.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out.flush()) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write to '" + path.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot write '" + path.string() + "'");
    }
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += sep;
        s += items[i];
    }
    return s;
}

std::string braces(const std::vector<QualeId>& ids) { return "{" + join(ids, ", ") + "}"; }

std::string factor_label(std::uint64_t prime, std::uint32_t exponent) {
    return exponent == 1 ? std::to_string(prime) : std::to_string(prime) + "^" + std::to_string(exponent);
}

std::string lcm_expression(const std::vector<BoundTerm>& terms, std::size_t skip) {
    std::vector<std::string> values;
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == skip) continue;
        values.push_back(std::to_string(terms[i].value));
        l = checked_lcm(l, terms[i].value);
    }
    return "lcm(" + join(values, ", ") + ") = " + std::to_string(l);
}

void print_period_text(const PeriodReport& r, std::ostream& out) {
    out << "n=" << r.n << " period=" << r.exact_period << " bound=" << r.bound << " ratio=" << r.ratio.num
        << "/" << r.ratio.den << "\n";
    std::vector<std::string> factors;
    for (const auto& t : r.terms) factors.push_back(factor_label(t.prime, t.exponent));
    out << "factorization: " << r.n << " = " << join(factors, " * ") << "\n";
    for (const auto& t : r.terms) {
        out << "  term " << factor_label(t.prime, t.exponent) << " class=" << to_string(t.prime_class)
            << " value=" << t.value;
        if (t.prime_class == PrimeClass::Two) {
            out << " (eps=" << std::max<std::uint32_t>(t.exponent - 1, 1) << ")";
        }
        out << "\n";
    }
    out << "2m* = " << lcm_expression(r.terms, r.terms.size()) << "\n";
    out << "m* = " << r.bound << (r.odd_lcm ? " (odd lcm, rounded up)" : "") << "\n";
    // Show which terms the lcm actually depends on.
    if (r.terms.size() > 1) {
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
            std::uint64_t l = 1;
            for (std::size_t j = 0; j < r.terms.size(); ++j) {
                if (j != i) l = checked_lcm(l, r.terms[j].value);
            }
            if (l != r.bound_lcm) {
                out << "  without the " << factor_label(r.terms[i].prime, r.terms[i].exponent)
                    << " term: " << lcm_expression(r.terms, i) << " (not " << r.bound_lcm << ")\n";
            }
        }
    }
}

std::int64_t checked_n(std::int64_t n) {
    if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
    if (n > Modulus::max_value) throw DomainError("n is too large");
    return n;
}

std::string table_csv(std::int64_t from, std::int64_t to, unsigned jobs) {
    const auto count = static_cast<std::size_t>(to - from + 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows(count);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto n = static_cast<std::uint64_t>(from) + i;
            rows[i] = {exact_period(Modulus(static_cast<std::int64_t>(n))), dyson_falk_bound(n)};
        }
    };
    jobs = std::clamp<unsigned>(jobs, 1U, 64U);
    std::vector<std::future<void>> tasks;
    for (unsigned j = 0; j < jobs; ++j) {
        tasks.push_back(std::async(std::launch::async, fill, count * j / jobs, count * (j + 1) / jobs));
    }
    for (auto& t : tasks) t.get();

    std::ostringstream csv;
    csv << "N,period,bound\n";
    for (std::size_t i = 0; i < count; ++i) {
        csv << (from + static_cast<std::int64_t>(i)) << "," << rows[i].first << "," << rows[i].second << "\n";
    }
    return csv.str();
}

std::string dispersion_csv(const std::vector<DispersionSample>& curve) {
    std::ostringstream csv;
    csv << "step,mean_distance\n";
    char buf[64];
    for (const auto& s : curve) {
        std::snprintf(buf, sizeof buf, "%.6f", s.mean_distance);
        csv << s.step << "," << buf << "\n";
    }
    return csv.str();
}

Configuration load_image(const std::string& path, bool lenient, std::ostream& err) {
    std::vector<std::string> warnings;
    auto c = load_pgm(read_file(path), lenient ? PgmMode::Lenient : PgmMode::Strict, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return c;
}

fs::path normalized_dir(const std::string& arg) {
    fs::path p = fs::path(arg).lexically_normal();
    if (!p.has_filename() && p.has_parent_path()) p = p.parent_path();
    return p;
}

// Snapshots are staged in a sibling directory and moved in only once all of them exist.
void write_snapshots(const Configuration& start, std::uint64_t steps, std::uint64_t every,
                     const std::string& outdir_arg) {
    const fs::path outdir = normalized_dir(outdir_arg);
    if (fs::exists(outdir) && !fs::is_directory(outdir)) {
        throw IoError("'" + outdir.string() + "' exists and is not a directory");
    }
    const fs::path staging = (outdir.has_parent_path() ? outdir.parent_path() : fs::path(".")) /
                             ("." + outdir.filename().string() + ".staging" + temp_suffix());
    std::vector<std::string> names;
    try {
        fs::create_directories(staging);
        Configuration current = start;
        for (std::uint64_t k = 0; k <= steps; k += every) {
            if (k > 0) current = iterate_configuration(current, every);
            names.push_back(snapshot_filename(k));
            write_file_atomic(staging / names.back(), save_pgm(current));
            if (steps - k < every) break;
        }
        fs::create_directories(outdir);
        for (const auto& name : names) fs::rename(staging / name, outdir / name);
        fs::remove_all(staging);
    } catch (...) {
        std::error_code ec;
        fs::remove_all(staging, ec);
        throw;
    }
}

void emit(const std::string& content, const std::string& path, std::ostringstream& out) {
    if (path.empty()) {
        out << content;
    } else {
        write_file_atomic(path, content);
    }
}

MatchGraph load_graph(const std::string& path) { return match_graph_from_json(read_file(path)); }

nlohmann::ordered_json sets_json(const std::vector<std::vector<QualeId>>& sets) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : sets) arr.push_back(s);
    return arr;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete cat map periods, image recurrence and qualia matching calculus", "catlab"};
    app.require_subcommand(1);

    std::ostringstream buffer;
    std::function<void()> action;

    // period
    std::int64_t period_n = 0;
    bool period_json = false;
    auto* period = app.add_subcommand("period", "Exact period, Dyson-Falk bound and per-factor terms");
    period->add_option("n", period_n, "Lattice size N")->required();
    period->add_flag("--json", period_json, "Emit a JSON document");
    period->callback([&] {
        action = [&] {
            const auto r = period_report(static_cast<std::uint64_t>(checked_n(period_n)));
            if (period_json) {
                buffer << to_json(r);
            } else {
                print_period_text(r, buffer);
            }
        };
    });

    // table
    std::int64_t table_from = 0, table_to = 0;
    std::string table_csv_path;
    unsigned table_jobs = std::max(1U, std::thread::hardware_concurrency());
    auto* table = app.add_subcommand("table", "CSV of N,period,bound for a range of N");
    table->add_option("from", table_from, "First N")->required();
    table->add_option("to", table_to, "Last N")->required();
    table->add_option("--csv", table_csv_path, "Write the CSV to this file instead of stdout");
    table->add_option("--jobs", table_jobs, "Worker threads")->check(CLI::Range(1U, 64U));
    table->callback([&] {
        action = [&] {
            if (table_from > table_to) throw UsageError("table range is empty (from > to)");
            if (table_to > table_limit) throw UsageError("table upper limit is 10000");
            checked_n(table_from);
            emit(table_csv(table_from, table_to, table_jobs), table_csv_path, buffer);
        };
    });

    // iterate
    std::string iter_input, iter_outdir;
    std::uint64_t iter_steps = 0, iter_every = 1;
    bool iter_lenient = false;
    auto* iterate = app.add_subcommand("iterate", "Write step_NNNN.pgm snapshots of an iterated image");
    iterate->add_option("--input", iter_input, "Square PGM image")->required();
    iterate->add_option("--steps", iter_steps, "Last iteration")->required();
    iterate->add_option("--every", iter_every, "Snapshot interval")->check(CLI::PositiveNumber);
    iterate->add_option("--outdir", iter_outdir, "Output directory")->required();
    iterate->add_flag("--lenient", iter_lenient, "Rescale PGMs whose maxval is not 255");
    iterate->callback([&] {
        action = [&] {
            if (iter_every == 0) throw UsageError("--every must be at least 1");
            const auto c = load_image(iter_input, iter_lenient, err);
            write_snapshots(c, iter_steps, iter_every, iter_outdir);
        };
    });

    // recurrence
    std::string rec_input;
    bool rec_json = false, rec_lenient = false;
    auto* recurrence = app.add_subcommand("recurrence", "Iterations until an image first reappears");
    recurrence->add_option("--input", rec_input, "Square PGM image")->required();
    recurrence->add_flag("--json", rec_json, "Emit a JSON document");
    recurrence->add_flag("--lenient", rec_lenient, "Rescale PGMs whose maxval is not 255");
    recurrence->callback([&] {
        action = [&] {
            const auto r = configuration_recurrence(load_image(rec_input, rec_lenient, err));
            if (rec_json) {
                buffer << to_json(r);
                return;
            }
            buffer << "n=" << r.n << " recurrence=" << r.recurrence_time << " period=" << r.exact_period
                   << " bound=" << (r.bound ? std::to_string(*r.bound) : "n/a") << "\n";
            buffer << "recurrence divides period: " << (r.exact_period % r.recurrence_time == 0 ? "yes" : "no")
                   << "\n";
            if (r.n <= 64) {
                buffer << "binary configurations on this lattice: 2^" << r.n * r.n << "\n";
            }
            buffer << "cycles (length, minimal period, count):\n";
            for (const auto& c : r.cycles) {
                buffer << "  " << c.cycle_length << " " << c.minimal_period << " " << c.count << "\n";
            }
        };
    });

    // orbit
    std::int64_t orbit_n = 0, orbit_x = 0, orbit_y = 0;
    bool orbit_points = false, orbit_json = false;
    auto* orbit = app.add_subcommand("orbit", "Orbit of a single lattice point");
    orbit->add_option("--n", orbit_n, "Lattice size N")->required();
    orbit->add_option("--x", orbit_x, "Column")->required();
    orbit->add_option("--y", orbit_y, "Row")->required();
    orbit->add_flag("--points", orbit_points, "List the orbit's points");
    orbit->add_flag("--json", orbit_json, "Emit a JSON document");
    orbit->callback([&] {
        action = [&] {
            const Modulus mod(orbit_n);
            const LatticePoint p = make_point(orbit_x, orbit_y, mod);
            const auto period_value = exact_period(mod);
            if (orbit_json) {
                nlohmann::ordered_json doc;
                doc["n"] = orbit_n;
                doc["x"] = orbit_x;
                doc["y"] = orbit_y;
                if (orbit_points) {
                    const auto o = orbit_of(p, mod);
                    doc["length"] = o.length;
                    doc["points"] = nlohmann::ordered_json::array();
                    for (const auto& q : o.points) doc["points"].push_back({q.x, q.y});
                } else {
                    doc["length"] = orbit_length(p, mod);
                }
                doc["period"] = period_value;
                buffer << doc.dump(2) << "\n";
                return;
            }
            if (orbit_points) {
                const auto o = orbit_of(p, mod);
                buffer << "n=" << orbit_n << " start=(" << p.x << ", " << p.y << ") length=" << o.length
                       << " period=" << period_value << "\n";
                for (const auto& q : o.points) buffer << q.x << " " << q.y << "\n";
            } else {
                buffer << "n=" << orbit_n << " start=(" << p.x << ", " << p.y
                       << ") length=" << orbit_length(p, mod) << " period=" << period_value << "\n";
            }
        };
    });

    // dispersion
    std::int64_t disp_n = 0;
    std::uint64_t disp_steps = 0;
    std::string disp_csv_path;
    auto* dispersion = app.add_subcommand("dispersion", "CSV of step,mean_distance for adjacent pixel pairs");
    dispersion->add_option("--n", disp_n, "Lattice size N")->required();
    dispersion->add_option("--steps", disp_steps, "Last step")->required();
    dispersion->add_option("--csv", disp_csv_path, "Write the CSV to this file instead of stdout");
    dispersion->callback([&] {
        action = [&] { emit(dispersion_csv(dispersion_curve(Modulus(checked_n(disp_n)), disp_steps)),
                            disp_csv_path, buffer); };
    });

    // qualia
    auto* qualia = app.add_subcommand("qualia", "Matching calculus: manors, clans, categories");
    qualia->require_subcommand(1);
    bool q_json = false;
    std::string q_graph, q_quale;

    auto* manor = qualia->add_subcommand("manor", "Manor of one quale in a match-graph file");
    manor->add_option("--graph", q_graph, "Match-graph JSON file")->required();
    manor->add_option("--quale", q_quale, "Quale identifier")->required();
    manor->add_flag("--json", q_json, "Emit a JSON document");
    manor->callback([&] {
        action = [&] {
            const auto m = manor_of(load_graph(q_graph), q_quale);
            if (q_json) {
                nlohmann::ordered_json doc{{"center", m.center}, {"members", m.members}};
                buffer << doc.dump(2) << "\n";
            } else {
                buffer << "manor(" << m.center << ") = " << braces(m.members) << "\n";
            }
        };
    });

    auto add_partition_command = [&](const char* name, const char* help) {
        auto* sub = qualia->add_subcommand(name, help);
        sub->add_option("--graph", q_graph, "Match-graph JSON file")->required();
        sub->add_flag("--json", q_json, "Emit a JSON document");
        sub->callback([&, name] {
            action = [&, name] {
                const auto g = load_graph(q_graph);
                const auto sets = std::string(name) == "clans" ? clan_partition(g).clans : categories(g);
                if (q_json) {
                    nlohmann::ordered_json doc;
                    doc[name] = sets_json(sets);
                    buffer << doc.dump(2) << "\n";
                    return;
                }
                buffer << name << ": " << sets.size() << "\n";
                for (const auto& s : sets) buffer << "  " << braces(s) << "\n";
            };
        });
    };
    add_partition_command("clans", "Clan partition (connected components of the match relation)");
    add_partition_command("categories", "Categories (maximal clans)");

    std::string mm_kind;
    std::uint64_t mm_n = 0;
    bool mm_check = false;
    auto* maxmanor = qualia->add_subcommand("maxmanor", "Maximum manor size in a regular cell network");
    maxmanor->add_option("--kind", mm_kind, "square, triangular or cubical")->required();
    maxmanor->add_option("--n", mm_n, "Matching distance")->required();
    maxmanor->add_flag("--check", mm_check, "Also count cells by lattice enumeration (n <= 20)");
    maxmanor->add_flag("--json", q_json, "Emit a JSON document");
    maxmanor->callback([&] {
        action = [&] {
            const auto kind = parse_network_kind(mm_kind);
            const auto size = max_manor_size(kind, mm_n);
            std::optional<std::uint64_t> counted;
            if (mm_check) counted = brute_force_max_manor(kind, mm_n > 20 ? 21 : static_cast<std::int64_t>(mm_n));
            if (q_json) {
                nlohmann::ordered_json doc{{"kind", to_string(kind)}, {"n", mm_n}, {"max_manor", size}};
                if (counted) doc["enumerated"] = *counted;
                buffer << doc.dump(2) << "\n";
                return;
            }
            buffer << "kind=" << to_string(kind) << " n=" << mm_n << " max_manor=" << size;
            if (counted) buffer << " enumerated=" << *counted;
            buffer << "\n";
        };
    });

    std::uint64_t span_count = 0, span_width = 0;
    auto* span = qualia->add_subcommand("span", "Manors in a linear array with a given M-span");
    span->add_option("--count", span_count, "Number of qualia (labelled 1..count)")->required();
    span->add_option("--span", span_width, "Largest label distance that still matches")->required();
    span->add_option("--quale", q_quale, "Only this quale's manor");
    span->add_flag("--json", q_json, "Emit a JSON document");
    span->callback([&] {
        action = [&] {
            const auto g = expand_linear_span({span_count, span_width});
            std::vector<Manor> manors;
            if (!q_quale.empty()) {
                manors.push_back(manor_of(g, q_quale));
            } else {
                for (const auto& q : g.qualia()) manors.push_back(manor_of(g, q));
            }
            if (q_json) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& m : manors) arr.push_back({{"center", m.center}, {"members", m.members}});
                buffer << nlohmann::ordered_json{{"manors", arr}}.dump(2) << "\n";
                return;
            }
            for (const auto& m : manors) buffer << "manor(" << m.center << ") = " << braces(m.members) << "\n";
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    }

    try {
        if (action) action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return DomainOrFormat;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return DomainOrFormat;
    }
    out << buffer.str();
    out.flush();
    return Ok;
}

} // namespace catlab::cli
