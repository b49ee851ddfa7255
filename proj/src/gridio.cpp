#include "hexcover/gridio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "hexcover/elliptic.hpp"
#include "hexcover/gamma.hpp"

namespace hexcover {

namespace {

const char* parse_double(const char* first, const char* last, double& out) {
    if (first != last && *first == '+') ++first;
    const char* digits = first;
    if (digits != last && *digits == '-') ++digits;
    if (digits == last || !(*digits == '.' || (*digits >= '0' && *digits <= '9')))
        return nullptr;
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr == first || !std::isfinite(out))
        return nullptr;
    return res.ptr;
}

} // namespace

cplx parse_complex(const std::string& text) {
    const char* first = text.data();
    const char* last = first + text.size();
    double a = 0.0;
    const char* p = parse_double(first, last, a);
    if (!p)
        throw std::invalid_argument("could not parse complex literal: " + text);
    if (p == last)
        return {a, 0.0};
    if (*p == 'i') {
        if (p + 1 != last)
            throw std::invalid_argument("trailing characters in complex literal: " + text);
        return {0.0, a};
    }
    if (*p != '+' && *p != '-')
        throw std::invalid_argument("could not parse complex literal: " + text);
    double sign = (*p == '-') ? -1.0 : 1.0;
    if (p + 1 == last || !((p[1] >= '0' && p[1] <= '9') || p[1] == '.'))
        throw std::invalid_argument("could not parse complex literal: " + text);
    double b = 0.0;
    const char* q = parse_double(p + 1, last, b);
    if (!q || q == last || *q != 'i' || q + 1 != last)
        throw std::invalid_argument("could not parse complex literal: " + text);
    return {a, sign * b};
}

std::string format_complex(cplx v) {
    char buf[80];
    double re = v.real();
    double im = v.imag();
    if (std::isnan(re) || std::isnan(im))
        return "nan";
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", re, im);
    return buf;
}

GridFunction parse_function(const std::string& name) {
    if (name == "wp") return GridFunction::wp;
    if (name == "wp-prime") return GridFunction::wp_prime;
    if (name == "lambda") return GridFunction::lambda;
    if (name == "j") return GridFunction::j;
    if (name == "phi") return GridFunction::phi;
    if (name == "phi-prime") return GridFunction::phi_prime;
    throw std::invalid_argument("unknown function: " + name +
                                " (expected wp, wp-prime, lambda, j, phi or phi-prime)");
}

namespace {

bool needs_upper_half(GridFunction f) {
    return f == GridFunction::lambda || f == GridFunction::j ||
           f == GridFunction::phi || f == GridFunction::phi_prime;
}

void eval_row(GridFunction f, const GridSpec& spec, const CoverContext& ctx,
              int row, GridNode* out) {
    double im = spec.ny > 1
        ? spec.im_min + row * (spec.im_max - spec.im_min) / (spec.ny - 1)
        : spec.im_min;
    std::optional<cplx> seed;
    for (int i = 0; i < spec.nx; ++i) {
        double re = spec.nx > 1
            ? spec.re_min + i * (spec.re_max - spec.re_min) / (spec.nx - 1)
            : spec.re_min;
        GridNode& node = out[i];
        node.z = {re, im};
        node.value = {0.0, 0.0};
        node.residual = 0.0;
        node.ok = false;
        try {
            switch (f) {
            case GridFunction::wp:
                node.value = wp(ctx.excised, node.z);
                break;
            case GridFunction::wp_prime:
                node.value = wp_prime(ctx.excised, node.z);
                break;
            case GridFunction::lambda:
                node.value = modular_lambda(ModularPoint(node.z));
                break;
            case GridFunction::j:
                node.value = klein_j(ModularPoint(node.z));
                break;
            case GridFunction::phi: {
                Reduction red = reduce_to_F(node.z);
                cplx v = alpha(klein_j(ModularPoint(red.w)), ctx);
                PhiResult base = invert_wp_prime_sq(v, ctx, seed);
                seed = base.value;
                node.value = affine_apply(affine_inverse(psi_matrix(red.g)),
                                          base.value);
                node.residual = base.residual;
                break;
            }
            case GridFunction::phi_prime:
                node.value = phi_prime(node.z, ctx);
                break;
            }
            node.ok = true;
        } catch (const std::exception&) {
            node.ok = false;
            seed.reset();
        }
    }
}

} // namespace

std::vector<GridNode> evaluate_grid(GridFunction f, const GridSpec& spec,
                                    const CoverContext& ctx) {
    if (spec.nx < 1 || spec.ny < 1 || spec.nx > 4096 || spec.ny > 4096)
        throw std::invalid_argument("grid dimensions must be between 1 and 4096");
    if (spec.re_max < spec.re_min || spec.im_max < spec.im_min)
        throw std::invalid_argument("grid bounds must satisfy min <= max");
    if (needs_upper_half(f) && spec.im_min <= 0.0)
        throw std::invalid_argument("grid for this function needs im_min > 0");

    std::vector<GridNode> nodes(static_cast<size_t>(spec.nx) * spec.ny);
#pragma omp parallel for schedule(dynamic)
    for (int row = 0; row < spec.ny; ++row)
        eval_row(f, spec, ctx, row, nodes.data() + static_cast<size_t>(row) * spec.nx);
    return nodes;
}

namespace {

void append_field(std::string& line, double x) {
    char buf[40];
    if (std::isnan(x))
        std::snprintf(buf, sizeof buf, "nan");
    else
        std::snprintf(buf, sizeof buf, "%.15g", x);
    line += buf;
}

} // namespace

void write_csv(const std::string& path, const std::vector<GridNode>& nodes) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open for writing: " + path);
    os << "re,im,val_re,val_im,residual\n";
    std::string line;
    for (const GridNode& node : nodes) {
        line.clear();
        append_field(line, node.z.real());
        line += ',';
        append_field(line, node.z.imag());
        line += ',';
        if (node.ok) {
            append_field(line, node.value.real());
            line += ',';
            append_field(line, node.value.imag());
            line += ',';
            append_field(line, node.residual);
        } else {
            line += "nan,nan,nan";
        }
        line += '\n';
        os << line;
    }
    os.flush();
    if (!os)
        throw IoError("write failed: " + path);
}

namespace {

void hsl_to_rgb(double h, double s, double l, unsigned char* rgb) {
    double c = (1.0 - std::fabs(2.0 * l - 1.0)) * s;
    double hp = h * 6.0;
    double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1)      { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else             { r = c; b = x; }
    double m = l - c / 2.0;
    double v[3] = {r + m, g + m, b + m};
    for (int k = 0; k < 3; ++k) {
        double t = std::clamp(v[k], 0.0, 1.0);
        rgb[k] = static_cast<unsigned char>(std::lround(t * 255.0));
    }
}

} // namespace

void write_ppm(const std::string& path, const GridSpec& spec,
               const std::vector<GridNode>& nodes) {
    if (nodes.size() != static_cast<size_t>(spec.nx) * spec.ny)
        throw std::invalid_argument("node count does not match grid dimensions");
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open for writing: " + path);
    os << "P6\n" << spec.nx << " " << spec.ny << "\n255\n";
    std::string row_bytes;
    for (int row = spec.ny - 1; row >= 0; --row) {
        row_bytes.clear();
        const GridNode* line = nodes.data() + static_cast<size_t>(row) * spec.nx;
        for (int i = 0; i < spec.nx; ++i) {
            unsigned char rgb[3] = {0, 0, 0};
            if (line[i].ok) {
                double m = std::abs(line[i].value);
                double h = std::arg(line[i].value) / (2.0 * 3.14159265358979323846) + 0.5;
                h = h - std::floor(h);
                double l = 0.25 + 0.5 * (m / (1.0 + m));
                hsl_to_rgb(h, 1.0, l, rgb);
            }
            row_bytes.append(reinterpret_cast<const char*>(rgb), 3);
        }
        os.write(row_bytes.data(), static_cast<std::streamsize>(row_bytes.size()));
    }
    os.flush();
    if (!os)
        throw IoError("write failed: " + path);
}

} // namespace hexcover
