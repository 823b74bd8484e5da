// Regenerates the shipped catalog pattern files from their builders, with
// provenance notes embedded. Run after editing catalog.cpp:
//   catalog_gen --out catalog
#include "algorec/catalog.hpp"
#include "algorec/pattern_compiler.hpp"
#include "algorec/pattern_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"regenerate catalog pattern files"};
    std::string outDir = "catalog";
    app.add_option("--out", outDir, "output directory")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    using namespace algorec;
    for (const std::string& name : catalog::catalogNames()) {
        CompiledPattern pattern = compile(catalog::catalogBuilder(name));
        pattern.name = name;
        nlohmann::ordered_json doc =
            nlohmann::ordered_json::parse(serializePattern(pattern));
        doc["provenance"] = catalog::catalogProvenance(name);
        doc["variants"] = catalog::catalogVariants(name);
        std::string path = outDir + "/" + name + ".pattern.json";
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        out << doc.dump(2) << "\n";
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}
