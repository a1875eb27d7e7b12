#include "csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <system_error>

namespace piezoscan::cli {

namespace {

constexpr double kMicro = 1e6;
constexpr double kDeg = 180.0 / std::numbers::pi;

// Status strings may contain commas; keep them on one CSV field.
std::string status_field(const std::string& status) {
  std::string out;
  out.reserve(status.size());
  for (char c : status) out += (c == ',' || c == '\n' || c == '\r') ? ';' : c;
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return {buf.data(), ptr};
}

std::string profile_csv(const std::vector<ProfilePoint>& profile) {
  std::string out = "x_um,y_um\n";
  for (const auto& p : profile) {
    out += format_number(p.position * kMicro);
    out += ',';
    out += format_number(p.deflection * kMicro);
    out += '\n';
  }
  return out;
}

std::string model_csv(const ScannerSolution& s) {
  std::string out = "phi_deg,y_max_um,x_at_ymax_um,F_uN,R_A_uN,rigidity_Nm2\n";
  out += format_number(s.tilt_magnitude() * kDeg) + ',' + format_number(s.y_max * kMicro) + ',' +
         format_number(s.x_at_ymax * kMicro) + ',' + format_number(s.force * kMicro) + ',' +
         format_number(s.reaction * kMicro) + ',' + format_number(s.rigidity) + '\n';
  return out;
}

std::string sweep_csv(SweepAxis axis, const std::vector<SweepRecord>& records) {
  std::string out = "param_name,param_value_si,phi_deg,y_max_um,F_uN,R_A_uN,status\n";
  const std::string name(axis_name(axis));
  for (const auto& r : records) {
    out += name + ',' + format_number(r.value) + ',' + format_number(r.tilt_deg) + ',' +
           format_number(r.y_max * kMicro) + ',' + format_number(r.force * kMicro) + ',' +
           format_number(r.reaction * kMicro) + ',' + status_field(r.status) + '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace piezoscan::cli
