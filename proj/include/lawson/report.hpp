#pragma once

#include <map>
#include <string>
#include <vector>

#include "lawson/certification.hpp"
#include "lawson/spectrum.hpp"

namespace lawson {

// Diff-friendly sorted key-value text block: "key = value" per line.
class TextReport {
  public:
    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    void set(const std::string& key, double value);
    void set(const std::string& key, int value) { kv_[key] = std::to_string(value); }
    void set(const std::string& key, bool value) { kv_[key] = value ? "PASS" : "FAIL"; }
    void set(const std::string& key, const Surd& value);
    void set(const std::string& key, const Rational& value) { kv_[key] = rat_str(value); }

    std::string str() const;
    void write(const std::string& path) const;

  private:
    std::map<std::string, std::string> kv_;
};

class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(const std::vector<std::string>& row);
    std::string str() const;
    void write(const std::string& path) const;

    static std::string num(double v);

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Deterministic shortest-roundtrip-style formatting (%.17g).
std::string format_double(double v);

TextReport certificate_report(const Certificate& cert, const BranchChainResult& upower_chain,
                              const BranchChainResult& vpower_chain);
TextReport spectrum_report_text(const SpectrumReport& rep,
                                const std::vector<SpectrumReport>& scaling_runs,
                                double link_mu, double lambda_mode1);

}  // namespace lawson
