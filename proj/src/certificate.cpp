#include "nilfocus/certificate.hpp"

#include <stdexcept>

namespace nilfocus {

const Rational* Certificate::find(const std::string& name) const {
    for (const Witness& w : witness)
        if (w.name == name) return &w.value;
    return nullptr;
}

void Certificate::add(const std::string& name, const Rational& value) {
    witness.push_back({name, value});
}

void Certificate::require(const std::string& op, const std::string& lhs, const std::string& rhs) {
    Check c;
    c.op = op;
    c.lhs = lhs;
    c.rhs = rhs;
    checks.push_back(std::move(c));
}

void Certificate::require_sum(const std::string& target,
                              std::vector<std::pair<int, std::string>> terms) {
    Check c;
    c.op = "sum";
    c.target = target;
    c.terms = std::move(terms);
    checks.push_back(std::move(c));
}

namespace {

Rational resolve(const Certificate& cert, const std::string& operand) {
    if (const Rational* w = cert.find(operand)) return *w;
    auto r = parse_rational(operand);
    if (!r) throw std::runtime_error("certificate: unresolvable operand '" + operand + "'");
    return *r;
}

}  // namespace

bool Certificate::reverify() const {
    for (const Check& c : checks) {
        if (c.op == "sum") {
            const Rational* target = find(c.target);
            if (!target) return false;
            Rational s = 0;
            for (const auto& [sgn, name] : c.terms) {
                const Rational* w = find(name);
                if (!w) return false;
                s += sgn * *w;
            }
            if (s != *target) return false;
            continue;
        }
        Rational a = resolve(*this, c.lhs), b = resolve(*this, c.rhs);
        bool ok = false;
        if (c.op == "lt")
            ok = a < b;
        else if (c.op == "le")
            ok = a <= b;
        else if (c.op == "gt")
            ok = a > b;
        else if (c.op == "ge")
            ok = a >= b;
        else if (c.op == "eq")
            ok = a == b;
        else
            throw std::runtime_error("certificate: unknown op '" + c.op + "'");
        if (!ok) return false;
    }
    return true;
}

void Certificate::settle() {
    verdict = reverify();
    if (status == "ok" && !verdict) status = "failed";
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json jw = nlohmann::json::array();
    for (const Witness& w : witness)
        jw.push_back({{"name", w.name}, {"num", num_str(w.value)}, {"den", den_str(w.value)}});
    nlohmann::json jc = nlohmann::json::array();
    for (const Check& c : checks) {
        nlohmann::json e{{"op", c.op}};
        if (c.op == "sum") {
            e["target"] = c.target;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [sgn, name] : c.terms) terms.push_back({{"sign", sgn}, {"name", name}});
            e["terms"] = terms;
        } else {
            e["lhs"] = c.lhs;
            e["rhs"] = c.rhs;
        }
        jc.push_back(e);
    }
    return nlohmann::json{{"claim", claim},     {"l", l},
                          {"k", k},             {"witness", jw},
                          {"checks", jc},       {"verdict", verdict},
                          {"status", status},   {"float_hint", float_hint}};
}

Certificate Certificate::from_json(const nlohmann::json& j) {
    Certificate c;
    c.claim = j.at("claim").get<std::string>();
    c.l = j.at("l").get<int>();
    c.k = j.at("k").get<int>();
    c.verdict = j.at("verdict").get<bool>();
    c.status = j.value("status", "ok");
    c.float_hint = j.value("float_hint", 0.0);
    for (const auto& e : j.at("witness")) {
        Integer num(e.at("num").get<std::string>());
        Integer den(e.at("den").get<std::string>());
        c.witness.push_back({e.at("name").get<std::string>(), Rational(num, den)});
    }
    for (const auto& e : j.at("checks")) {
        Check ch;
        ch.op = e.at("op").get<std::string>();
        if (ch.op == "sum") {
            ch.target = e.at("target").get<std::string>();
            for (const auto& t : e.at("terms"))
                ch.terms.emplace_back(t.at("sign").get<int>(), t.at("name").get<std::string>());
        } else {
            ch.lhs = e.at("lhs").get<std::string>();
            ch.rhs = e.at("rhs").get<std::string>();
        }
        c.checks.push_back(std::move(ch));
    }
    return c;
}

}  // namespace nilfocus
