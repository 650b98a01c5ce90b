#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lawson/report.hpp"

using namespace lawson;

TEST_CASE("TextReport: sorted keys, deterministic rendering") {
    TextReport rep;
    rep.set("zeta", 1.5);
    rep.set("alpha", std::string("x"));
    rep.set("mid.key", 3);
    const std::string s = rep.str();
    CHECK(s == "alpha = x\nmid.key = 3\nzeta = 1.5\n");

    TextReport again;
    again.set("mid.key", 3);
    again.set("zeta", 1.5);
    again.set("alpha", std::string("x"));
    CHECK(again.str() == s);
}

TEST_CASE("format_double round-trips exactly") {
    for (double v : {1.0 / 3.0, 1.872e-6, 7.056e23, 0.0, -1.25e-300}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("CsvWriter: header and width checks") {
    CsvWriter csv({"a", "b"});
    csv.add_row({"1", "2"});
    CHECK(csv.str() == "a,b\n1,2\n");
    CHECK_THROWS_AS(csv.add_row({"only-one"}), std::invalid_argument);
}

TEST_CASE("certificate report renders exact constants symbolically") {
    const ConeParams cone(7, 2);
    const Certificate cert = certify_pointwise(cone, 64);
    const auto up = branch_chain(cone, BranchKind::UPower);
    const auto vp = branch_chain(cone, BranchKind::VPower);
    const TextReport rep = certificate_report(cert, up, vp);
    const std::string s = rep.str();
    CHECK(s.find("claimed_c.symbolic = (1/1771561)*sqrt(11)") != std::string::npos);
    CHECK(s.find("status = PASS") != std::string::npos);
    CHECK(s.find("chain.vpower.terminus = 1/161051") != std::string::npos);
    // Byte-identical re-render.
    const Certificate cert2 = certify_pointwise(cone, 64);
    CHECK(certificate_report(cert2, up, vp).str() == s);
    // File round-trip.
    const std::string path = (std::filesystem::temp_directory_path() / "cert-test.txt").string();
    rep.write(path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == s);
    std::filesystem::remove(path);
}
