#include "lawson/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lawson {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void TextReport::set(const std::string& key, double value) { kv_[key] = format_double(value); }
void TextReport::set(const std::string& key, const Surd& value) { kv_[key] = value.str(); }

std::string TextReport::str() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
    return os.str();
}

void TextReport::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << str();
}

void CsvWriter::add_row(const std::vector<std::string>& row) {
    if (row.size() != header_.size())
        throw std::invalid_argument("CsvWriter: row width mismatch");
    rows_.push_back(row);
}

std::string CsvWriter::num(double v) { return format_double(v); }

std::string CsvWriter::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header_.size(); ++i)
        os << header_[i] << (i + 1 < header_.size() ? "," : "\n");
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
    return os.str();
}

void CsvWriter::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << str();
}

namespace {

void fill_chain(TextReport& rep, const std::string& prefix, const BranchChainResult& chain) {
    rep.set(prefix + ".terminus", chain.terminus);
    rep.set(prefix + ".per_cone_constant", chain.per_cone_constant);
    rep.set(prefix + ".dist_normalized", chain.dist_normalized);
    rep.set(prefix + ".steps", static_cast<int>(chain.steps.size()));
    int ok = 0;
    for (const auto& s : chain.steps) ok += s.holds ? 1 : 0;
    rep.set(prefix + ".steps_verified", ok);
    if (!chain.note.empty()) rep.set(prefix + ".note", chain.note);
}

}  // namespace

TextReport certificate_report(const Certificate& cert, const BranchChainResult& upower_chain,
                              const BranchChainResult& vpower_chain) {
    TextReport rep;
    rep.set("certificate.version", 1);
    rep.set("cone.k", cert.cone.k);
    rep.set("cone.h", cert.cone.h);
    rep.set("cone.m", cert.cone.m());
    rep.set("claimed_c.symbolic", cert.claimed_c);
    rep.set("claimed_c.upper", cert.claimed_c.enclosure().hi);
    rep.set("sweep.subdivisions", cert.subdivisions);
    rep.set("sweep.verified_lower_bound", cert.verified_lower_bound);
    rep.set("sweep.margin", cert.margin);
    rep.set("sweep.true_min_estimate", cert.true_min_estimate);
    rep.set("sweep.upower.lower_bound", cert.upower.lower_bound);
    rep.set("sweep.upower.d", cert.upower.d);
    rep.set("sweep.upower.argmin", cert.upower.argmin);
    rep.set("sweep.vpower.lower_bound", cert.vpower.lower_bound);
    rep.set("sweep.vpower.d", cert.vpower.d);
    rep.set("sweep.vpower.argmin", cert.vpower.argmin);
    fill_chain(rep, "chain.upower", upower_chain);
    fill_chain(rep, "chain.vpower", vpower_chain);
    rep.set("status", cert.pass);
    return rep;
}

TextReport spectrum_report_text(const SpectrumReport& rep,
                                const std::vector<SpectrumReport>& scaling_runs,
                                double link_mu, double lambda_mode1) {
    TextReport out;
    out.set("cone.k", rep.cone.k);
    out.set("cone.h", rep.cone.h);
    out.set("cone.m", rep.cone.m());
    out.set("R", rep.R);
    out.set("grid", rep.grid_size);
    out.set("lambda", rep.lambda);
    out.set("lambda.times_R2", rep.lambda_times_R2);
    out.set("lambda.extrapolated", rep.lambda_extrapolated);
    out.set("lambda.convergence_order", rep.convergence_order);
    out.set("hardy_floor", rep.hardy_floor);
    out.set("claimed_c", rep.claimed_c);
    out.set("margin_factor", rep.margin_factor);
    for (const auto& s : scaling_runs) {
        const std::string key = "scaling.R_" + format_double(s.R);
        out.set(key + ".lambda_times_R2", s.lambda_times_R2);
    }
    out.set("link.mu1", link_mu);
    out.set("mode1.lambda", lambda_mode1);
    out.set("mode1.above_radial", lambda_mode1 > rep.lambda);
    return out;
}

}  // namespace lawson
