#pragma once

#include <string>
#include <vector>

#include "qcpoly/construct.hpp"

namespace qcpoly {

// Self-describing ordered key-value document; serializes one "key: value" line
// per item, in insertion order, so identical runs produce identical bytes.
struct Report {
    std::vector<std::pair<std::string, std::string>> items;

    void add(std::string key, std::string value);
    void add(std::string key, const char* value);
    void add(std::string key, const BigInt& value);
    void add(std::string key, long long value);
    void add(std::string key, bool value);
    void add(std::string key, const Rational& value);
    void merge(const Report& other);
    std::string to_text() const;
};

Report describe(const QcContext& qc);
Report describe(const TowerReport& rep);
Report describe(const QcGraph& gr);
Report describe(const ConjectureScanReport& rep);
Report describe(const ProbabilityReport& rep);

// Graphviz document for a QcGraph; node labels use the polynomial text format
// and periodic nodes are drawn with a double outline.
std::string graph_dot(const QcGraph& gr);

} // namespace qcpoly
