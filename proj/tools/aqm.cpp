/*
Copyright 2026 the aqm authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqm/display_adapt.hpp"
#include "aqm/errors.hpp"
#include "aqm/fwm.hpp"
#include "aqm/golden_tables.hpp"
#include "aqm/image.hpp"
#include "aqm/quant_matrix.hpp"
#include "aqm/rd_metrics.hpp"
#include "aqm/scaling_list.hpp"
#include "aqm/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitGoldenMismatch = 2;

std::vector<std::string> splitList(const std::string& text)
{
    std::vector<std::string> parts;
    std::string item;
    std::stringstream stream(text);
    while (std::getline(stream, item, ','))
        if (!item.empty())
            parts.push_back(item);
    return parts;
}

std::string fwmToCsv(const aqm::FrequencyWeightMatrix& fwm)
{
    std::string csv;
    char cell[32];
    for (int i = 0; i < fwm.size(); i++)
    {
        for (int j = 0; j < fwm.size(); j++)
        {
            std::snprintf(cell, sizeof(cell), "%.6f", fwm.at(i, j));
            csv += cell;
            csv += (j + 1 < fwm.size()) ? ',' : '\n';
        }
    }
    return csv;
}

std::string qmToCsv(const aqm::QuantMatrix& qm)
{
    std::string csv;
    for (int i = 0; i < qm.size(); i++)
    {
        for (int j = 0; j < qm.size(); j++)
        {
            csv += std::to_string(qm.at(i, j));
            csv += (j + 1 < qm.size()) ? ',' : '\n';
        }
    }
    return csv;
}

json fwmToJson(const aqm::FrequencyWeightMatrix& fwm)
{
    json rows = json::array();
    for (int i = 0; i < fwm.size(); i++)
    {
        json row = json::array();
        for (int j = 0; j < fwm.size(); j++)
            row.push_back(fwm.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

json qmToJson(const aqm::QuantMatrix& qm)
{
    json rows = json::array();
    for (int i = 0; i < qm.size(); i++)
    {
        json row = json::array();
        for (int j = 0; j < qm.size(); j++)
            row.push_back(qm.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

void writeTextFile(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

std::string readTextFile(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw aqm::ParseError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<uint8_t> readBinaryFile(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw aqm::ParseError("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return bytes;
}

void writeBinaryFile(const fs::path& path, const std::vector<uint8_t>& bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

// Every file-producing run drops a manifest beside its primary output;
// replaying the stored argv reproduces the outputs byte-identically.
void writeManifest(const fs::path& primaryOutput, const std::string& subcommand,
                   const json& config, const std::vector<std::string>& argv,
                   const std::vector<std::string>& outputs)
{
    json manifest;
    manifest["subcommand"] = subcommand;
    manifest["argv"] = argv;
    manifest["config"] = config;
    manifest["outputs"] = outputs;
    writeTextFile(primaryOutput.string() + ".manifest.json", manifest.dump(2) + "\n");
}

aqm::DisplayGeometry resolveGeometry(const std::string& preset, const std::string& geometry)
{
    if (!preset.empty())
    {
        const auto g = aqm::presetGeometry(preset);
        if (!g)
            throw std::domain_error("unknown preset '" + preset + "'");
        return *g;
    }
    const auto g = aqm::parseGeometry(geometry);
    if (!g)
        throw std::domain_error("bad geometry '" + geometry + "', expected WIDTHxHEIGHT");
    return *g;
}

int runGoldenBattery()
{
    int failures = 0;
    for (const aqm::golden::GoldenCheck& check : aqm::golden::runGoldenChecks())
    {
        std::printf("[%s] %s (max error %.6g)\n", check.passed ? "PASS" : "FAIL",
                    check.name.c_str(), check.maxError);
        if (!check.passed)
            failures++;
    }
    return failures == 0 ? kExitOk : kExitGoldenMismatch;
}

// ---- gen / fwm ----------------------------------------------------------

struct GenOptions
{
    std::string preset;
    std::string geometry;
    std::string kind = "intra";
    std::string format = "csv";
    std::string output;
    int scale = 16;
    bool useDefault = false;
    bool golden = false;
};

int cmdGen(const GenOptions& opt, const std::vector<std::string>& argv)
{
    int exitCode = kExitOk;
    if (opt.golden)
        exitCode = runGoldenBattery();

    const bool haveGeometry = !opt.preset.empty() || !opt.geometry.empty();
    if (!haveGeometry && !opt.useDefault)
    {
        if (opt.golden)
            return exitCode; // golden-only invocation
        throw std::domain_error("gen: need --preset, --geometry or --default");
    }

    const aqm::QmKind kind = opt.kind == "inter" ? aqm::QmKind::Inter : aqm::QmKind::Intra;
    aqm::FrequencyWeightMatrix fwm = aqm::computeFwm();
    aqm::QuantMatrix qm(8, kind);
    json config;
    config["kind"] = opt.kind;
    config["scale"] = opt.scale;
    if (opt.useDefault)
    {
        qm = kind == aqm::QmKind::Inter ? aqm::defaultInterQm() : aqm::defaultIntraQm();
        config["source"] = "default";
    }
    else
    {
        const aqm::DisplayGeometry geometry = resolveGeometry(opt.preset, opt.geometry);
        fwm = aqm::adaptFwm(fwm, geometry);
        qm = aqm::fwmToQm(fwm, opt.scale, kind);
        config["source"] = "adaptive";
        config["display"] = {{"width", geometry.width}, {"height", geometry.height}};
        config["resolution_param"] = geometry.resolutionParam;
    }

    if (opt.output.empty())
    {
        if (opt.format == "json")
        {
            json doc;
            doc["fwm"] = fwmToJson(fwm);
            doc["qm"] = qmToJson(qm);
            std::cout << doc.dump(2) << "\n";
        }
        else
        {
            std::cout << "# fwm\n" << fwmToCsv(fwm) << "# qm\n" << qmToCsv(qm);
        }
        return exitCode;
    }

    const std::string ext = opt.format == "json" ? ".json" : ".csv";
    const std::string fwmPath = opt.output + "_fwm" + ext;
    const std::string qmPath = opt.output + "_qm" + ext;
    if (opt.format == "json")
    {
        writeTextFile(fwmPath, fwmToJson(fwm).dump(2) + "\n");
        writeTextFile(qmPath, qmToJson(qm).dump(2) + "\n");
    }
    else
    {
        writeTextFile(fwmPath, fwmToCsv(fwm));
        writeTextFile(qmPath, qmToCsv(qm));
    }
    config["format"] = opt.format;
    writeManifest(qmPath, "gen", config, argv, {fwmPath, qmPath});
    return exitCode;
}

struct FwmOptions
{
    std::string preset;
    std::string geometry;
    std::string format = "csv";
    std::string output;
};

int cmdFwm(const FwmOptions& opt, const std::vector<std::string>& argv)
{
    aqm::FrequencyWeightMatrix fwm = aqm::computeFwm();
    json config;
    config["adapted"] = false;
    if (!opt.preset.empty() || !opt.geometry.empty())
    {
        const aqm::DisplayGeometry geometry = resolveGeometry(opt.preset, opt.geometry);
        fwm = aqm::adaptFwm(fwm, geometry);
        config["adapted"] = true;
        config["display"] = {{"width", geometry.width}, {"height", geometry.height}};
    }
    const std::string body =
        opt.format == "json" ? fwmToJson(fwm).dump(2) + "\n" : fwmToCsv(fwm);
    if (opt.output.empty())
    {
        std::cout << body;
        return kExitOk;
    }
    writeTextFile(opt.output, body);
    config["format"] = opt.format;
    writeManifest(opt.output, "fwm", config, argv, {opt.output});
    return kExitOk;
}

// ---- pack / unpack ------------------------------------------------------

aqm::ScalingListPayload payloadFromJson(const json& doc)
{
    if (!doc.contains("layers") || !doc["layers"].is_array() || doc["layers"].empty())
        throw aqm::ParseError("payload json: missing non-empty 'layers' array");
    aqm::ScalingListPayload payload;
    for (const json& layerDoc : doc["layers"])
    {
        std::vector<aqm::ScalingList> layer;
        if (!layerDoc.contains("lists") || !layerDoc["lists"].is_array())
            throw aqm::ParseError("payload json: each layer needs a 'lists' array");
        for (const json& listDoc : layerDoc["lists"])
        {
            const std::string kindName = listDoc.value("kind", "");
            if (kindName != "intra" && kindName != "inter")
                throw aqm::ParseError("payload json: list kind must be 'intra' or 'inter'");
            const aqm::QmKind kind =
                kindName == "inter" ? aqm::QmKind::Inter : aqm::QmKind::Intra;
            const json& rows = listDoc.at("matrix");
            if (!rows.is_array() || rows.size() != 8)
                throw aqm::ParseError("payload json: matrix must have 8 rows");
            aqm::QuantMatrix matrix(8, kind);
            for (int i = 0; i < 8; i++)
            {
                if (!rows[i].is_array() || rows[i].size() != 8)
                    throw aqm::ParseError("payload json: matrix rows must have 8 entries");
                for (int j = 0; j < 8; j++)
                    matrix.set(i, j, rows[i][j].get<int>());
            }
            layer.push_back(aqm::ScalingList{kind, matrix});
        }
        payload.layers.push_back(std::move(layer));
    }
    return payload;
}

json payloadToJson(const aqm::ScalingListPayload& payload)
{
    json layers = json::array();
    for (const auto& layer : payload.layers)
    {
        json lists = json::array();
        for (const aqm::ScalingList& list : layer)
        {
            json entry;
            entry["kind"] = aqm::qmKindName(list.kind);
            entry["matrix"] = qmToJson(list.matrix);
            lists.push_back(entry);
        }
        layers.push_back(json{{"lists", lists}});
    }
    return json{{"layers", layers}};
}

int cmdPack(const std::string& input, const std::string& output,
            const std::vector<std::string>& argv)
{
    json doc;
    try
    {
        doc = json::parse(readTextFile(input));
    }
    catch (const json::exception& e)
    {
        throw aqm::ParseError("cannot parse " + input + ": " + e.what());
    }
    const aqm::ScalingListPayload payload = payloadFromJson(doc);
    writeBinaryFile(output, aqm::packContainer(payload));
    writeManifest(output, "pack", json{{"input", input}}, argv, {output});
    return kExitOk;
}

int cmdUnpack(const std::string& input, const std::string& output,
              const std::vector<std::string>& argv)
{
    const aqm::ScalingListPayload payload = aqm::unpackContainer(readBinaryFile(input));
    const std::string body = payloadToJson(payload).dump(2) + "\n";
    if (output.empty())
    {
        std::cout << body;
        return kExitOk;
    }
    writeTextFile(output, body);
    writeManifest(output, "unpack", json{{"input", input}}, argv, {output});
    return kExitOk;
}

// ---- simulate -----------------------------------------------------------

struct SimulateOptions
{
    std::string corpus = "zoneplate";
    std::string input; // PGM path; overrides corpus
    int size = 512;
    uint64_t seed = 42;
    std::string layers = "bl,el1,el2";
    std::string geometries = "hd,4k,8k";
    std::string qps = "22,27,32,37";
    std::string qmSources = "default";
    int workers = 0;
    std::string output;
    std::string curves;    // per-(layer,source) curve CSV stem
    std::string saveRecon; // directory for reconstruction PGMs
};

int cmdSimulate(const SimulateOptions& opt, const std::vector<std::string>& argv)
{
    aqm::Image source;
    if (!opt.input.empty())
    {
        source = aqm::readPgm(opt.input);
    }
    else
    {
        const auto corpus = aqm::parseCorpusName(opt.corpus);
        if (!corpus)
            throw std::domain_error("unknown corpus '" + opt.corpus + "'");
        source = aqm::makeCorpusImage(*corpus, opt.size, opt.size, opt.seed);
    }

    const std::vector<std::string> layerNames = splitList(opt.layers);
    const std::vector<std::string> geometryNames = splitList(opt.geometries);
    if (layerNames.empty())
        throw std::domain_error("simulate: no layers given");
    if (geometryNames.size() < layerNames.size())
        throw std::domain_error("simulate: need one geometry per layer");

    std::vector<aqm::LayerConfig> layers;
    const int layerCount = static_cast<int>(layerNames.size());
    for (int i = 0; i < layerCount; i++)
    {
        const auto label = aqm::parseLayerLabel(layerNames[i]);
        if (!label)
            throw std::domain_error("unknown layer '" + layerNames[i] + "'");
        aqm::LayerConfig config;
        config.label = *label;
        const int divisor = 1 << (layerCount - 1 - i);
        config.codedWidth = source.width / divisor;
        config.codedHeight = source.height / divisor;
        if (config.codedWidth < 8 || config.codedHeight < 8 ||
            config.codedWidth * divisor != source.width ||
            config.codedHeight * divisor != source.height)
            throw std::domain_error("simulate: source does not divide into layer sizes");
        config.geometry = resolveGeometry(geometryNames[i], "");
        layers.push_back(config);
    }

    std::vector<int> qps;
    for (const std::string& q : splitList(opt.qps))
        qps.push_back(std::stoi(q));
    if (qps.empty())
        throw std::domain_error("simulate: no qps given");

    std::vector<aqm::QmSource> sources;
    for (const std::string& s : splitList(opt.qmSources))
    {
        const auto source_ = aqm::parseQmSource(s);
        if (!source_)
            throw std::domain_error("unknown qm source '" + s + "'");
        sources.push_back(*source_);
    }
    if (sources.empty())
        throw std::domain_error("simulate: no qm sources given");

    std::string csv = "layer,label,qp,qm_source,psnr_db,rate_bits\n";
    // curves[layer index][source] -> (rate, psnr) per qp
    std::map<std::pair<int, std::string>, std::vector<aqm::RdPoint>> curves;
    for (const aqm::QmSource source_ : sources)
    {
        for (const int qp : qps)
        {
            for (aqm::LayerConfig& config : layers)
            {
                config.qp = qp;
                config.qmSource = source_;
            }
            std::vector<aqm::Image> recons;
            const aqm::SimReport report =
                aqm::runPipeline(source, layers, opt.workers,
                                 opt.saveRecon.empty() ? nullptr : &recons);
            const std::string rows = aqm::reportToCsv(report);
            csv += rows.substr(rows.find('\n') + 1); // strip the header
            for (const aqm::LayerResult& r : report.layers)
                curves[{r.layerIndex, aqm::qmSourceName(r.qmSource)}].push_back(
                    {r.rateBits, r.psnrDb});
            if (!opt.saveRecon.empty())
            {
                fs::create_directories(opt.saveRecon);
                for (size_t i = 0; i < recons.size(); i++)
                {
                    char name[128];
                    std::snprintf(name, sizeof(name), "recon_%s_qp%02d_%s.pgm",
                                  aqm::qmSourceName(source_), qp,
                                  aqm::layerLabelName(report.layers[i].label));
                    aqm::writePgm(fs::path(opt.saveRecon) / name, recons[i]);
                }
            }
        }
    }

    std::vector<std::string> outputs;
    if (!opt.curves.empty())
    {
        for (auto& [key, points] : curves)
        {
            std::sort(points.begin(), points.end(),
                      [](const aqm::RdPoint& a, const aqm::RdPoint& b) {
                          return a.rateBits < b.rateBits;
                      });
            std::string body = "rate_bits,psnr_db\n";
            char line[64];
            for (const aqm::RdPoint& p : points)
            {
                std::snprintf(line, sizeof(line), "%.2f,%.4f\n", p.rateBits, p.psnrDb);
                body += line;
            }
            const std::string path = opt.curves + "_layer" + std::to_string(key.first) + "_" +
                                     key.second + ".csv";
            writeTextFile(path, body);
            outputs.push_back(path);
        }
    }

    if (opt.output.empty())
    {
        std::cout << csv;
        return kExitOk;
    }
    writeTextFile(opt.output, csv);
    outputs.insert(outputs.begin(), opt.output);

    json config;
    config["corpus"] = opt.input.empty() ? opt.corpus : "file:" + opt.input;
    config["size"] = opt.size;
    config["seed"] = opt.seed;
    config["layers"] = layerNames;
    config["geometries"] = geometryNames;
    config["qps"] = qps;
    json sourceNames = json::array();
    for (const aqm::QmSource s : sources)
        sourceNames.push_back(aqm::qmSourceName(s));
    config["qm_sources"] = sourceNames;
    writeManifest(opt.output, "simulate", config, argv, outputs);
    return kExitOk;
}

// ---- bdrate -------------------------------------------------------------

aqm::RdCurve readCurveCsv(const fs::path& path)
{
    const std::string text = readTextFile(path);
    aqm::RdCurve curve;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line))
    {
        if (line.empty() || !(std::isdigit(line[0]) || line[0] == '-' || line[0] == '.'))
            continue; // header or comment
        const size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw aqm::ParseError("curve csv " + path.string() + ": expected rate,psnr");
        curve.points.push_back(
            {std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    curve.validate();
    return curve;
}

int cmdBdrate(const std::string& anchorPath, const std::string& testPath,
              const std::string& output, const std::vector<std::string>& argv)
{
    const aqm::RdCurve anchor = readCurveCsv(anchorPath);
    const aqm::RdCurve test = readCurveCsv(testPath);
    const double bd = aqm::bdRate(anchor, test);
    std::printf("%.2f\n", bd);

    if (!output.empty())
    {
        auto gnuplotData = [](const aqm::RdCurve& curve) {
            std::string body = "# rate_bits psnr_db\n";
            char line[64];
            for (const aqm::RdPoint& p : curve.points)
            {
                std::snprintf(line, sizeof(line), "%.2f %.4f\n", p.rateBits, p.psnrDb);
                body += line;
            }
            return body;
        };
        const std::string anchorOut = output + "_anchor.dat";
        const std::string testOut = output + "_test.dat";
        writeTextFile(anchorOut, gnuplotData(anchor));
        writeTextFile(testOut, gnuplotData(test));
        json config;
        config["anchor"] = anchorPath;
        config["test"] = testPath;
        char bdText[32];
        std::snprintf(bdText, sizeof(bdText), "%.2f", bd);
        config["bd_rate_percent"] = std::string(bdText);
        writeManifest(testOut, "bdrate", config, argv, {anchorOut, testOut});
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"HVS-based display-adaptive quantization matrix toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> argvCopy(argv, argv + argc);

    GenOptions gen;
    CLI::App* genCmd = app.add_subcommand("gen", "Generate weighting + quantization matrices");
    genCmd->add_option("--preset", gen.preset, "Display preset: sd, hd, fhd, 4k, 8k, max");
    genCmd->add_option("--geometry", gen.geometry, "Display size as WIDTHxHEIGHT");
    genCmd->add_option("--kind", gen.kind, "Matrix kind: intra or inter")
        ->check(CLI::IsMember({"intra", "inter"}));
    genCmd->add_option("--scale", gen.scale, "Rounding scale (default 16)");
    genCmd->add_option("--format", gen.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    genCmd->add_option("--output", gen.output, "Output path stem (omit to print)");
    genCmd->add_flag("--default", gen.useDefault, "Emit the default matrices");
    genCmd->add_flag("--golden", gen.golden, "Validate generators against embedded tables");

    FwmOptions fwmOpt;
    CLI::App* fwmCmd = app.add_subcommand("fwm", "Export the frequency weighting matrix");
    fwmCmd->add_option("--preset", fwmOpt.preset, "Adapt to a preset display");
    fwmCmd->add_option("--geometry", fwmOpt.geometry, "Adapt to WIDTHxHEIGHT");
    fwmCmd->add_option("--format", fwmOpt.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    fwmCmd->add_option("--output", fwmOpt.output, "Output path (omit to print)");

    std::string packInput, packOutput;
    CLI::App* packCmd = app.add_subcommand("pack", "Pack scaling lists into a container");
    packCmd->add_option("--input", packInput, "Payload JSON")->required();
    packCmd->add_option("--output", packOutput, "Container path")->required();

    std::string unpackInput, unpackOutput;
    CLI::App* unpackCmd = app.add_subcommand("unpack", "Unpack a container to JSON");
    unpackCmd->add_option("--input", unpackInput, "Container path")->required();
    unpackCmd->add_option("--output", unpackOutput, "JSON path (omit to print)");

    SimulateOptions sim;
    CLI::App* simCmd = app.add_subcommand("simulate", "Run the layered codec simulator");
    simCmd->add_option("--corpus", sim.corpus,
                       "Synthetic source: zoneplate, gradient, noise, checkerboard");
    simCmd->add_option("--input", sim.input, "Source PGM (overrides --corpus)");
    simCmd->add_option("--size", sim.size, "Synthetic source size (default 512)");
    simCmd->add_option("--seed", sim.seed, "Corpus seed (default 42)");
    simCmd->add_option("--layers", sim.layers, "Comma list of bl, el1, el2");
    simCmd->add_option("--geometries", sim.geometries, "Comma list of presets per layer");
    simCmd->add_option("--qps", sim.qps, "Comma list of QPs (default 22,27,32,37)");
    simCmd->add_option("--qm", sim.qmSources, "Comma list of default, adaptive, flat");
    simCmd->add_option("--workers", sim.workers, "Worker threads (0 = AQM_THREADS or auto)");
    simCmd->add_option("--output", sim.output, "Report CSV path (omit to print)");
    simCmd->add_option("--curves", sim.curves, "Stem for per-layer rate/psnr curve CSVs");
    simCmd->add_option("--save-recon", sim.saveRecon, "Directory for reconstruction PGMs");

    std::string bdAnchor, bdTest, bdOutput;
    CLI::App* bdCmd = app.add_subcommand("bdrate", "Average bitrate delta between two curves");
    bdCmd->add_option("--anchor", bdAnchor, "Anchor curve CSV (rate_bits,psnr_db)")->required();
    bdCmd->add_option("--test", bdTest, "Test curve CSV")->required();
    bdCmd->add_option("--output", bdOutput, "Stem for gnuplot-ready .dat files");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitError;
    }

    try
    {
        if (genCmd->parsed())
            return cmdGen(gen, argvCopy);
        if (fwmCmd->parsed())
            return cmdFwm(fwmOpt, argvCopy);
        if (packCmd->parsed())
            return cmdPack(packInput, packOutput, argvCopy);
        if (unpackCmd->parsed())
            return cmdUnpack(unpackInput, unpackOutput, argvCopy);
        if (simCmd->parsed())
            return cmdSimulate(sim, argvCopy);
        if (bdCmd->parsed())
            return cmdBdrate(bdAnchor, bdTest, bdOutput, argvCopy);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
