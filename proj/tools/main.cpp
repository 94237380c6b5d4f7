/* Batch verification harness for the qtri identity catalog. Talks to the
 * core library through its C interface only. */

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtri.h"

namespace {

using json = nlohmann::json;

struct Range {
    long long lo, hi;
};

struct ParamInfo {
    std::string name;
    long long min;
    std::optional<long long> max;
    Range defaults;
};

struct IdentityInfo {
    std::string id;
    bool is_series;
    std::string description;
    std::vector<ParamInfo> params;
};

std::vector<IdentityInfo> load_catalog(const qtri_catalog* cat) {
    std::vector<IdentityInfo> out;
    const int n = qtri_catalog_count(cat);
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        IdentityInfo info;
        info.id = qtri_catalog_id(cat, i);
        info.is_series = qtri_catalog_kind(cat, i) == 1;
        info.description = qtri_catalog_description(cat, i);
        const int np = qtri_catalog_param_count(cat, i);
        for (int p = 0; p < np; ++p) {
            ParamInfo pi;
            pi.name = qtri_catalog_param_name(cat, i, p);
            pi.min = qtri_catalog_param_min(cat, i, p);
            long long mx = 0;
            if (qtri_catalog_param_max(cat, i, p, &mx)) pi.max = mx;
            pi.defaults = {qtri_catalog_param_default_lo(cat, i, p),
                           qtri_catalog_param_default_hi(cat, i, p)};
            info.params.push_back(std::move(pi));
        }
        out.push_back(std::move(info));
    }
    return out;
}

[[noreturn]] void config_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

/* "NAME=LO..HI" or "NAME=V" */
std::pair<std::string, Range> parse_range(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        config_error("range '" + text + "' is not of the form name=lo..hi");
    const std::string name = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    const auto dots = rest.find("..", 1);
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(rest);
            return {name, {v, v}};
        }
        const long long lo = std::stoll(rest.substr(0, dots));
        const long long hi = std::stoll(rest.substr(dots + 2));
        if (lo > hi) config_error("range '" + text + "' is empty");
        return {name, {lo, hi}};
    } catch (const std::exception&) {
        config_error("range '" + text + "' has non-integer bounds");
    }
}

struct Instance {
    std::string id;
    std::vector<std::pair<std::string, long long>> params; /* schema order */
};

struct InstanceOutcome {
    bool pass = false;
    bool has_mismatch = false;
    long long mismatch_exp2 = 0;
    std::string mismatch_lhs, mismatch_rhs;
    double millis = 0.0;
    int error = QTRI_OK;
};

/* Cartesian product of the per-parameter ranges, row-major in schema order. */
void expand_instances(const IdentityInfo& info,
                      const std::map<std::string, Range>& overrides,
                      std::vector<Instance>& out) {
    std::vector<Range> ranges;
    for (const auto& p : info.params) {
        const auto it = overrides.find(p.name);
        const Range r = it != overrides.end() ? it->second : p.defaults;
        if (r.lo < p.min)
            config_error(info.id + ": " + p.name + " must be >= " + std::to_string(p.min));
        if (p.max && r.hi > *p.max)
            config_error(info.id + ": " + p.name + " must be <= " + std::to_string(*p.max));
        ranges.push_back(r);
    }
    for (const auto& [name, range] : overrides) {
        (void)range;
        bool known = false;
        for (const auto& p : info.params) known = known || p.name == name;
        if (!known) config_error(info.id + " has no parameter named " + name);
    }

    std::vector<long long> current(ranges.size());
    const std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == ranges.size()) {
            Instance inst;
            inst.id = info.id;
            for (std::size_t i = 0; i < ranges.size(); ++i)
                inst.params.emplace_back(info.params[i].name, current[i]);
            out.push_back(std::move(inst));
            return;
        }
        for (long long v = ranges[k].lo; v <= ranges[k].hi; ++v) {
            current[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
}

InstanceOutcome run_instance(const qtri_catalog* cat, const Instance& inst) {
    std::vector<const char*> names;
    std::vector<long long> values;
    for (const auto& [n, v] : inst.params) {
        names.push_back(n.c_str());
        values.push_back(v);
    }
    qtri_result* r = nullptr;
    InstanceOutcome o;
    o.error = qtri_verify_instance(cat, inst.id.c_str(), names.data(), values.data(),
                                   static_cast<int>(names.size()), &r);
    if (o.error != QTRI_OK) return o;
    o.pass = qtri_result_pass(r) != 0;
    o.millis = qtri_result_millis(r);
    if (qtri_result_has_mismatch(r)) {
        o.has_mismatch = true;
        o.mismatch_exp2 = qtri_result_mismatch_exponent_twice(r);
        o.mismatch_lhs = qtri_result_mismatch_lhs(r);
        o.mismatch_rhs = qtri_result_mismatch_rhs(r);
    }
    qtri_result_free(r);
    return o;
}

std::string params_text(const Instance& inst) {
    std::string s;
    for (const auto& [n, v] : inst.params) {
        if (!s.empty()) s += " ";
        s += n + "=" + std::to_string(v);
    }
    return s;
}

std::string exponent_text(long long exp2) {
    if (exp2 % 2 == 0) return std::to_string(exp2 / 2);
    return std::to_string(exp2) + "/2";
}

int cmd_list(const qtri_catalog* cat) {
    for (const auto& info : load_catalog(cat)) {
        std::string params;
        for (const auto& p : info.params) {
            if (!params.empty()) params += ", ";
            params += p.name + ">=" + std::to_string(p.min);
            if (p.max) params += "<=" + std::to_string(*p.max);
            params += " [" + std::to_string(p.defaults.lo) + ".." +
                      std::to_string(p.defaults.hi) + "]";
        }
        std::printf("%-24s %-10s %s\n", info.id.c_str(),
                    info.is_series ? "series" : "polynomial", info.description.c_str());
        std::printf("%-24s %-10s params: %s\n", "", "", params.c_str());
    }
    return 0;
}

int cmd_verify(const qtri_catalog* cat, const std::string& target,
               const std::vector<std::string>& range_args,
               std::optional<long long> order, const std::string& format, unsigned jobs) {
    const auto infos = load_catalog(cat);

    std::vector<Instance> instances;
    if (target == "all") {
        if (!range_args.empty())
            config_error("per-parameter ranges cannot be combined with 'all'");
        for (const auto& info : infos) {
            std::map<std::string, Range> overrides;
            if (order)
                for (const auto& p : info.params)
                    if (p.name == "order") overrides["order"] = {*order, *order};
            expand_instances(info, overrides, instances);
        }
    } else {
        const IdentityInfo* info = nullptr;
        for (const auto& i : infos)
            if (i.id == target) info = &i;
        if (!info) config_error("unknown identity '" + target + "'");

        std::map<std::string, Range> overrides;
        for (const auto& text : range_args) {
            const auto [name, range] = parse_range(text);
            overrides[name] = range;
        }
        if (order) {
            bool has_order = false;
            for (const auto& p : info->params) has_order |= p.name == "order";
            if (has_order) overrides["order"] = {*order, *order};
        }
        expand_instances(*info, overrides, instances);
    }
    if (instances.empty()) config_error("no instances to verify");

    const auto wall_start = std::chrono::steady_clock::now();
    std::vector<InstanceOutcome> outcomes(instances.size());
    unsigned n_jobs = jobs == 0 ? std::thread::hardware_concurrency() : jobs;
    if (n_jobs == 0) n_jobs = 1;
    n_jobs = std::min<unsigned>(n_jobs, static_cast<unsigned>(instances.size()));

    if (n_jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            outcomes[i] = run_instance(cat, instances[i]);
    } else {
        /* shared-nothing workers; results land at their instance index, so
         * report order never depends on completion order */
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_jobs);
        for (unsigned t = 0; t < n_jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= instances.size()) return;
                    outcomes[i] = run_instance(cat, instances[i]);
                }
            });
        for (auto& t : pool) t.join();
    }
    const double wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - wall_start)
                               .count();

    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i].error != QTRI_OK)
            config_error(std::string(qtri_strerror(outcomes[i].error)) +
                         " while verifying " + instances[i].id + " " +
                         params_text(instances[i]));

    std::size_t passed = 0;
    for (const auto& o : outcomes) passed += o.pass ? 1 : 0;
    const std::size_t failed = outcomes.size() - passed;

    if (format == "json") {
        json records = json::array();
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& inst = instances[i];
            const auto& o = outcomes[i];
            json params = json::object();
            for (const auto& [n, v] : inst.params) params[n] = v;
            json rec{{"identity", inst.id},
                     {"params", params},
                     {"status", o.pass ? "pass" : "fail"},
                     {"ms", o.millis}};
            if (o.has_mismatch)
                rec["mismatch"] = {{"exponent_times_2", o.mismatch_exp2},
                                   {"lhs_coeff", o.mismatch_lhs},
                                   {"rhs_coeff", o.mismatch_rhs}};
            else
                rec["mismatch"] = nullptr;
            records.push_back(std::move(rec));
        }
        json report{{"records", std::move(records)},
                    {"summary",
                     {{"total", outcomes.size()},
                      {"passed", passed},
                      {"failed", failed},
                      {"wall_ms", wall_ms}}}};
        std::cout << report.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& o = outcomes[i];
            if (o.pass) {
                std::printf("pass %s %s (%.2f ms)\n", instances[i].id.c_str(),
                            params_text(instances[i]).c_str(), o.millis);
            } else {
                std::printf("FAIL %s %s first mismatch at q^(%s): lhs=%s rhs=%s (%.2f ms)\n",
                            instances[i].id.c_str(), params_text(instances[i]).c_str(),
                            exponent_text(o.mismatch_exp2).c_str(), o.mismatch_lhs.c_str(),
                            o.mismatch_rhs.c_str(), o.millis);
            }
        }
        std::printf("summary: %zu instances, %zu passed, %zu failed (wall %.0f ms)\n",
                    outcomes.size(), passed, failed, wall_ms);
    }
    return failed == 0 ? 0 : 1;
}

int cmd_series(const qtri_catalog* cat, const std::string& name, long long order,
               const std::vector<std::string>& param_args) {
    std::vector<std::string> names_storage;
    std::vector<long long> values;
    for (const auto& text : param_args) {
        const auto [n, range] = parse_range(text);
        if (range.lo != range.hi)
            config_error("series parameters take single values, not ranges");
        names_storage.push_back(n);
        values.push_back(range.lo);
    }
    std::vector<const char*> names;
    for (const auto& n : names_storage) names.push_back(n.c_str());

    qtri_series* s = nullptr;
    const int err = qtri_series_eval(cat, name.c_str(), order, names.data(), values.data(),
                                     static_cast<int>(names.size()), &s);
    if (err != QTRI_OK) config_error(std::string(qtri_strerror(err)) + ": " + name);
    for (long long n = 0; n <= qtri_series_order(s); ++n)
        std::printf("%lld %s\n", n, qtri_series_coeff(s, n));
    qtri_series_free(s);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-trinomial and q-series identities"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list catalog identities and their schemas");

    std::string verify_target;
    std::vector<std::string> verify_ranges;
    std::string format = "text";
    long long order_flag = -1;
    unsigned jobs = 0;
    auto* verify = app.add_subcommand("verify", "verify identities over parameter ranges");
    verify->add_option("identity", verify_target, "catalog id or 'all'")->required();
    verify->add_option("ranges", verify_ranges, "parameter ranges as name=lo..hi");
    verify->add_option("--order", order_flag, "truncation order for series identities");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--jobs", jobs, "worker threads (0 = auto)");

    std::string series_name;
    long long series_order = 20;
    std::vector<std::string> series_params;
    auto* series =
        app.add_subcommand("series", "print coefficients of a series side or product");
    series->add_option("name", series_name,
                       "<id>.lhs, <id>.rhs, euler_product or kr1_product")
        ->required();
    series->add_option("--order", series_order, "highest power of q to print");
    series->add_option("-p,--param", series_params, "extra parameter as name=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qtri_catalog* cat = qtri_catalog_new();
    if (!cat) {
        std::cerr << "error: could not initialize the catalog\n";
        return 2;
    }
    int rc = 0;
    if (list->parsed()) {
        rc = cmd_list(cat);
    } else if (verify->parsed()) {
        std::optional<long long> order;
        if (order_flag >= 0) order = order_flag;
        rc = cmd_verify(cat, verify_target, verify_ranges, order, format, jobs);
    } else if (series->parsed()) {
        rc = cmd_series(cat, series_name, series_order, series_params);
    }
    qtri_catalog_free(cat);
    return rc;
}
