#include "hpt/field_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hpt/dec.hpp"

namespace hpt {

void write_form(std::ostream& out, const Form& f) {
    out << f.degree() << " " << f.grid().n << "\n";
    out.precision(17);
    for (int c = 0; c < f.components(); ++c) {
        const auto& data = f.component(c);
        for (size_t i = 0; i < data.size(); ++i) {
            out << data[i];
            out << (((i + 1) % 8 == 0) ? '\n' : ' ');
        }
        if (!data.empty() && data.size() % 8 != 0) out << '\n';
    }
}

void write_form_file(const std::string& path, const Form& f) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    write_form(out, f);
}

Form read_form(std::istream& in, int dealias_factor) {
    int degree = -1, n = 0;
    if (!(in >> degree >> n)) throw FormatError("form file: bad header");
    if (degree < 0 || degree > 3) throw FormatError("form file: degree out of range");
    Grid grid;
    try {
        grid = Grid(n, dealias_factor);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("form file: ") + e.what());
    }
    Form f(grid, degree);
    for (int c = 0; c < f.components(); ++c) {
        auto& data = f.component(c);
        for (size_t i = 0; i < data.size(); ++i) {
            if (!(in >> data[i]))
                throw FormatError("form file: too few values for declared k and N");
        }
    }
    double extra;
    if (in >> extra) throw FormatError("form file: trailing values beyond declared count");
    return f;
}

Form read_form_file(const std::string& path, int dealias_factor) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_form(in, dealias_factor);
}

FluidState read_fluid_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open manifest " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("manifest parse error: ") + e.what());
    }
    if (!doc.contains("N") || !doc.contains("times") || !doc.contains("samples"))
        throw FormatError("manifest needs N, times and samples");

    FluidState state;
    state.grid = Grid(doc["N"].get<int>());
    state.times = doc["times"].get<std::vector<double>>();
    auto samples = doc["samples"];
    if (samples.size() != state.times.size())
        throw FormatError("manifest: samples and times disagree");

    std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) { return (base / p).string(); };

    for (const auto& sample : samples) {
        Form rho = read_form_file(resolve(sample.at("rho").get<std::string>()));
        Form uflat = read_form_file(resolve(sample.at("u").get<std::string>()));
        Form p = read_form_file(resolve(sample.at("p").get<std::string>()));
        if (rho.degree() != 0 || p.degree() != 0 || uflat.degree() != 1)
            throw FormatError("manifest: rho/p must be 0-forms and u a 1-form");
        if (!(rho.grid() == state.grid) || !(uflat.grid() == state.grid) ||
            !(p.grid() == state.grid))
            throw FormatError("manifest: sample grids disagree with declared N");
        state.rho.push_back(std::move(rho));
        state.u.push_back(sharp(uflat));
        state.p.push_back(std::move(p));
    }
    return state;
}

void write_fluid_manifest(const std::string& directory, const std::string& stem,
                          const FluidState& state) {
    state.validate();
    std::filesystem::create_directories(directory);
    nlohmann::json doc;
    doc["N"] = state.grid.n;
    doc["times"] = state.times;
    doc["samples"] = nlohmann::json::array();
    for (size_t i = 0; i < state.times.size(); ++i) {
        std::string tag = stem + "_" + std::to_string(i);
        std::string rho_file = tag + "_rho.txt";
        std::string u_file = tag + "_u.txt";
        std::string p_file = tag + "_p.txt";
        std::filesystem::path base(directory);
        write_form_file((base / rho_file).string(), state.rho[i]);
        write_form_file((base / u_file).string(), flat(state.u[i]));
        write_form_file((base / p_file).string(), state.p[i]);
        doc["samples"].push_back({{"rho", rho_file}, {"u", u_file}, {"p", p_file}});
    }
    std::ofstream out(std::filesystem::path(directory) / (stem + "_manifest.json"));
    if (!out) throw FormatError("cannot write manifest");
    out << doc.dump(2) << "\n";
}

}  // namespace hpt
