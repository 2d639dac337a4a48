#include "milnor/serialize.hpp"

#include <string>

#include "milnor/error.hpp"
#include "milnor/poly_io.hpp"

namespace milnor {

namespace {

// nlohmann throws its own exceptions on type errors; surface them as input errors.
template <typename F>
auto guarded(F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON document: ") + e.what());
    }
}

int int_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

json subspace_to_json(const Subspace& e) {
    json basis = json::array();
    for (std::size_t r = 0; r < e.dim(); ++r) {
        json row = json::array();
        for (const auto& q : e.basis().row(r)) row.push_back(to_string(q));
        basis.push_back(std::move(row));
    }
    return json{{"n", e.ambient().n},
                {"degree", e.ambient().degree},
                {"order", "grlex"},
                {"dim", e.dim()},
                {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const json& doc) {
    return guarded([&] {
        const Ambient ambient{int_field(doc, "n"), int_field(doc, "degree")};
        if (ambient.n < 0 || ambient.degree < 0) throw InputError("negative n or degree");
        if (doc.contains("order") && doc.at("order") != "grlex") throw InputError("unsupported monomial order");
        RationalMatrix rows(0, ambient.dim());
        for (const auto& row : doc.at("basis")) {
            std::vector<Rational> values;
            for (const auto& entry : row) values.push_back(parse_rational(entry.get<std::string>()));
            if (values.size() != ambient.dim()) throw InputError("basis row has the wrong length");
            rows.append_row(values);
        }
        Subspace out = Subspace::span(ambient, rows);
        if (doc.contains("dim") && int_field(doc, "dim") != static_cast<int>(out.dim())) {
            throw InputError("declared dim does not match the basis rank");
        }
        return out;
    });
}

json generators_to_json(const GeneratorTuple& w) {
    json gens = json::array();
    for (const auto& g : w.gens()) gens.push_back(format_polynomial(g));
    return json{{"n", w.n()}, {"d", w.d()}, {"gens", std::move(gens)}};
}

GeneratorTuple generators_from_json(const json& doc) {
    return guarded([&] {
        const int n = int_field(doc, "n");
        const int d = int_field(doc, "d");
        std::vector<HomogeneousPolynomial> gens;
        for (const auto& g : doc.at("gens")) gens.push_back(parse_polynomial(g.get<std::string>(), n, d - 1));
        return GeneratorTuple(n, d, std::move(gens));
    });
}

json associated_form_to_json(const AssociatedForm& b) {
    return json{{"n", b.n}, {"d", b.d}, {"T", b.socle}, {"form", format_polynomial(b.form)}};
}

AssociatedForm associated_form_from_json(const json& doc) {
    return guarded([&] {
        AssociatedForm out;
        out.n = int_field(doc, "n");
        out.d = int_field(doc, "d");
        out.socle = int_field(doc, "T");
        if (out.n < 1 || out.d < 2 || out.socle != socle_degree(out.n, out.d)) {
            throw InputError("T does not match n and d");
        }
        out.form = parse_polynomial(doc.at("form").get<std::string>(), out.n, out.socle);
        return out;
    });
}

json fiber_to_json(const FiberResult& fiber) {
    json basis = json::array();
    for (const auto& g : fiber.basis) basis.push_back(format_polynomial(g));
    return json{{"s", fiber.s()}, {"basis", std::move(basis)}};
}

FiberResult fiber_from_json(const json& doc, int n, int d) {
    return guarded([&] {
        FiberResult out;
        out.n = n;
        out.d = d;
        for (const auto& g : doc.at("basis")) out.basis.push_back(parse_polynomial(g.get<std::string>(), n, d));
        if (int_field(doc, "s") != static_cast<int>(out.basis.size())) {
            throw InputError("declared s does not match the basis size");
        }
        return out;
    });
}

json st_report_to_json(const STReport& report) {
    return json{{"is_st", report.is_st}, {"s", report.s}, {"fiber", fiber_to_json(report.fiber)}};
}

json tangent_kernel_to_json(const TangentKernel& kernel, bool per_generator) {
    json basis = json::array();
    for (const auto& v : kernel.basis) {
        if (per_generator) {
            json tuple = json::array();
            for (const auto& h : v) tuple.push_back(format_polynomial(h));
            basis.push_back(std::move(tuple));
        } else {
            basis.push_back(format_polynomial(v.front()));
        }
    }
    return json{{"k", kernel.k},
                {"tangent_dim", kernel.tangent_dim},
                {"kernel_dim", kernel.kernel_dim},
                {"kernel_basis", std::move(basis)}};
}

json hilbert_to_json(const HilbertProfile& profile) {
    json a = json::array();
    json b = json::array();
    for (int k = 0; k <= profile.socle + 1; ++k) {
        a.push_back(profile.a(k));
        b.push_back(profile.b(k));
    }
    return json{{"n", profile.n}, {"d", profile.d}, {"T", profile.socle}, {"a", std::move(a)}, {"b", std::move(b)}};
}

}  // namespace milnor
