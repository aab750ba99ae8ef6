#include "suzree/verify.hpp"

#include "suzree/case_io.hpp"
#include "suzree/disconnected.hpp"

#include <fstream>
#include <future>
#include <ostream>
#include <set>
#include <sstream>

namespace suzree::cli {

namespace {

bool result_clean(const lusztig::LusztigResult& r) {
    if (r.conjectural) return true;  // conjectural output never fails a run
    bool ok = r.verdict.pass;
    if (r.omega_check) ok = ok && r.omega_check->pass;
    if (r.p_check) ok = ok && r.p_check->pass;
    if (r.lambda_check) ok = ok && r.lambda_check->pass;
    return ok;
}

void log_result(const lusztig::LusztigResult& r, std::ostream& log) {
    log << "case " << r.case_name << ": ";
    if (r.conjectural)
        log << "CONJECTURAL";
    else if (result_clean(r))
        log << "PASS";
    else
        log << "FAIL";
    log << " (" << r.verdict.cells << " cells";
    char sec[32];
    std::snprintf(sec, sizeof sec, ", %.3fs)", r.seconds);
    log << sec << "\n";
    if (!r.conjectural) {
        for (const auto& mm : r.verdict.mismatches)
            log << "  mismatch " << mm.row_label << " / " << mm.col_label << ": computed "
                << mm.actual << ", expected " << mm.expected << "\n";
        auto log_check = [&](const char* what, const std::optional<lusztig::ComparisonReport>& c) {
            if (c && !c->pass) {
                log << "  " << what << " differs in " << c->mismatches.size() << " cells\n";
                for (const auto& mm : c->mismatches)
                    log << "    " << mm.row_label << " / " << mm.col_label << ": computed "
                        << mm.actual << ", expected " << mm.expected << "\n";
            }
        };
        log_check("expected Omega", r.omega_check);
        log_check("expected P", r.p_check);
        log_check("expected Lambda", r.lambda_check);
    }
}

void write_reports(const lusztig::LusztigResult& r, const RunConfig& config, bool stdout_reports,
                   std::ostream& log) {
    for (const auto& fmt_name : config.formats) {
        const auto fmt = io::format_from_string(fmt_name);
        if (config.out_dir.empty()) {
            if (stdout_reports) {
                std::ostringstream os;
                io::emit(r, fmt, os);
                log << os.str();
            }
            continue;
        }
        const std::string path =
            config.out_dir + "/" + r.case_name + "." + io::extension_for(fmt);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw io::CaseLoadError("cannot write report file " + path);
        io::emit(r, fmt, out);
        log << "wrote " << path << "\n";
    }
}

lusztig::LusztigResult run_named_case(const RunConfig& config, const std::string& name) {
    return lusztig::run_case(io::load_case_by_name(config.data_dir, name));
}

int run_cases(const RunConfig& config, const std::vector<std::string>& names,
              bool include_models, bool stdout_reports, std::ostream& log) {
    bool any_fail = false;
    try {
        std::vector<lusztig::LusztigResult> results;
        if (config.parallel) {
            std::vector<std::future<lusztig::LusztigResult>> futures;
            futures.reserve(names.size());
            for (const auto& name : names)
                futures.push_back(std::async(std::launch::async,
                                             [&config, name] { return run_named_case(config, name); }));
            for (auto& f : futures) results.push_back(f.get());
        } else {
            for (const auto& name : names) results.push_back(run_named_case(config, name));
        }
        for (const auto& r : results) {
            log_result(r, log);
            write_reports(r, config, stdout_reports, log);
            if (!result_clean(r)) any_fail = true;
        }
        if (include_models) {
            auto suite = models::run_model_suite(config.models);
            std::ostringstream os;
            io::emit_model_suite(suite, io::Format::Text, os);
            log << os.str();  // counts are one-line-per-model; always shown
            if (!config.out_dir.empty()) {
                for (const auto& fmt_name : config.formats) {
                    const auto fmt = io::format_from_string(fmt_name);
                    const auto used = fmt == io::Format::JsonFmt ? fmt : io::Format::Text;
                    const std::string path =
                        config.out_dir + "/models." + io::extension_for(used);
                    std::ofstream out(path, std::ios::binary);
                    if (!out) throw io::CaseLoadError("cannot write report file " + path);
                    io::emit_model_suite(suite, used, out);
                    log << "wrote " << path << "\n";
                }
            }
            if (!suite.all_ok) any_fail = true;
        }
    } catch (const io::CaseLoadError& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& log) {
    std::vector<std::string> names;
    bool include_models = false;
    const std::set<std::string> known{"b2", "g2", "f4", "b2-disconnected", "f4-disconnected",
                                      "models"};
    for (const auto& name : config.case_names) {
        if (!known.count(name)) {
            log << "error: unknown case \"" << name << "\"\n";
            return 2;
        }
        if (name == "models")
            include_models = true;
        else
            names.push_back(name);
    }
    return run_cases(config, names, include_models, /*stdout_reports=*/true, log);
}

int verify_all(const RunConfig& config, std::ostream& log) {
    const std::vector<std::string> names{"b2", "g2", "f4", "b2-disconnected", "f4-disconnected"};
    return run_cases(config, names, /*include_models=*/true, /*stdout_reports=*/false, log);
}

}  // namespace suzree::cli
