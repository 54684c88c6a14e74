#include "hardysin/corpus.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "hardysin/error.hpp"
#include "hardysin/specfun.hpp"

namespace hardysin::corpus {
namespace {

double param(const Params& params, const std::string& key, const std::string& name) {
    const auto it = params.find(key);
    if (it == params.end()) {
        throw DomainError("corpus: function '" + name + "' is missing parameter '" + key + "'");
    }
    return it->second;
}

TestFunction sine(double k, const std::string& name) {
    TestFunction t;
    t.label = name;
    t.f = [k](double x) { return std::sin(k * x); };
    t.df = [k](double x) { return k * std::cos(k * x); };
    t.d2f = [k](double x) { return -k * k * std::sin(k * x); };
    // sin(k(pi - t)) = sin(k pi) cos(kt) - cos(k pi) sin(kt)
    const double skp = specfun::sin_pi(Complex{k, 0.0}).real();
    const double ckp = specfun::cos_pi(Complex{k, 0.0}).real();
    t.f_reflected = [k, skp, ckp](double u) {
        return skp * std::cos(k * u) - ckp * std::sin(k * u);
    };
    t.df_reflected = [k, skp, ckp](double u) {
        return k * (ckp * std::cos(k * u) + skp * std::sin(k * u));
    };
    t.vanishes_at_0 = true;
    t.vanishes_at_pi = k == std::round(k);
    return t;
}

TestFunction poly(double a, double b, const std::string& name) {
    if (!(a > 0.5) || !(b == 0.0 || b > 0.5)) {
        throw DomainError("corpus: poly needs a > 1/2 and b = 0 or b > 1/2");
    }
    TestFunction t;
    t.label = name;
    t.vanishes_at_0 = true;
    t.vanishes_at_pi = b > 0.0;
    if (b == 0.0) {
        t.f = [a](double x) { return std::pow(x, a); };
        t.df = [a](double x) { return a * std::pow(x, a - 1.0); };
        t.d2f = [a](double x) { return a * (a - 1.0) * std::pow(x, a - 2.0); };
        return t;
    }
    t.f = [a, b](double x) { return std::pow(x, a) * std::pow(kPi - x, b); };
    t.df = [a, b](double x) {
        const double y = kPi - x;
        return std::pow(x, a - 1.0) * std::pow(y, b - 1.0) * (a * y - b * x);
    };
    t.d2f = [a, b](double x) {
        const double y = kPi - x;
        const double g = a / x - b / y;
        return std::pow(x, a) * std::pow(y, b) * (g * g - a / (x * x) - b / (y * y));
    };
    t.f_reflected = [a, b](double u) { return std::pow(kPi - u, a) * std::pow(u, b); };
    t.df_reflected = [a, b](double u) {
        const double x = kPi - u;
        return std::pow(x, a - 1.0) * std::pow(u, b - 1.0) * (a * u - b * x);
    };
    return t;
}

TestFunction sine_power(double e, const std::string& name) {
    if (!(e > 0.5)) throw DomainError("corpus: sine_power needs e > 1/2");
    TestFunction t;
    t.label = name;
    t.f = [e](double x) { return std::pow(std::sin(x), e); };
    t.df = [e](double x) { return e * std::pow(std::sin(x), e - 1.0) * std::cos(x); };
    t.d2f = [e](double x) {
        const double sn = std::sin(x);
        const double c = std::cos(x);
        return e * (e - 1.0) * std::pow(sn, e - 2.0) * c * c - e * std::pow(sn, e);
    };
    t.f_reflected = [e](double u) { return std::pow(std::sin(u), e); };
    t.df_reflected = [e](double u) { return -e * std::pow(std::sin(u), e - 1.0) * std::cos(u); };
    return t;
}

TestFunction bump(double center, double width, const std::string& name) {
    if (!(width > 0.0 && center - width >= 0.0 && center + width <= kPi)) {
        throw DomainError("corpus: bump support must lie inside [0, pi]");
    }
    // exp(g(r)), g = 1 - 1/(1 - r^2).
    struct Parts {
        double f, g1, g2;
    };
    const auto parts = [center, width](double x) -> Parts {
        const double r = (x - center) / width;
        const double q = 1.0 - r * r;
        if (!(q > 0.0)) return {0.0, 0.0, 0.0};
        const double f = std::exp(1.0 - 1.0 / q);
        const double g1 = -2.0 * r / (q * q);
        const double g2 = -2.0 / (q * q) - 8.0 * r * r / (q * q * q);
        return {f, g1, g2};
    };
    TestFunction t;
    t.label = name;
    t.f = [parts](double x) { return parts(x).f; };
    t.df = [parts, width](double x) {
        const Parts p = parts(x);
        return p.f == 0.0 ? 0.0 : p.f * p.g1 / width;
    };
    t.d2f = [parts, width](double x) {
        const Parts p = parts(x);
        return p.f == 0.0 ? 0.0 : p.f * (p.g2 + p.g1 * p.g1) / (width * width);
    };
    return t;
}

TestFunction sqrt_log(const std::string& name) {
    TestFunction t;
    t.label = name;
    t.f = [](double x) { return std::sqrt(x) / std::log(1.0 / x); };
    t.df = [](double x) {
        const double l = std::log(1.0 / x);
        return (0.5 / l + 1.0 / (l * l)) / std::sqrt(x);
    };
    t.d2f = [](double x) {
        const double l = std::log(1.0 / x);
        return (-0.25 / l + 1.0 / (l * l) + 2.0 / (l * l * l)) / (x * std::sqrt(x));
    };
    t.vanishes_at_pi = false;
    return t;
}

}  // namespace

TestFunction make(const std::string& family, const Params& params, const std::string& name) {
    if (family == "sine") return sine(param(params, "k", name), name);
    if (family == "poly") return poly(param(params, "a", name), param(params, "b", name), name);
    if (family == "sine_power") return sine_power(param(params, "e", name), name);
    if (family == "bump") {
        return bump(param(params, "center", name), param(params, "width", name), name);
    }
    if (family == "sqrt_log") return sqrt_log(name);
    throw DomainError("corpus: unknown family '" + family + "'");
}

std::string default_path() {
    if (const char* env = std::getenv("HARDYSIN_CORPUS")) return env;
    return std::string(HARDYSIN_DATA_DIR) + "/hardy_corpus.json";
}

std::vector<TestFunction> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("corpus: cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("corpus: malformed JSON in '" + path + "': " + e.what());
    }
    std::vector<TestFunction> out;
    for (const auto& rec : doc.at("functions")) {
        const std::string name = rec.at("name").get<std::string>();
        Params params;
        for (const auto& [key, value] : rec.at("params").items()) {
            params[key] = value.get<double>();
        }
        out.push_back(make(rec.at("family").get<std::string>(), params, name));
    }
    return out;
}

}  // namespace hardysin::corpus
