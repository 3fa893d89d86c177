#ifndef RESLAB_SPECTRA_HPP
#define RESLAB_SPECTRA_HPP

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace reslab::spectra {

// Canonical internal representation: frequencies in Hz, S21 linear complex.
// All unit conversions happen at the ingestion boundary.
struct ComplexSpectrum {
    std::vector<double> freqs_hz;            // strictly increasing, length >= 8
    std::vector<std::complex<double>> s21;   // same length as freqs_hz
    std::optional<double> power_dbm;         // probe power metadata (dBm)
    std::optional<double> temperature_k;     // stage temperature metadata (K)
    std::string label;

    std::size_t size() const { return freqs_hz.size(); }
};

enum class SweepAxis { Power, Temperature };

// A series of spectra taken against one swept axis through a fixed input chain.
struct SweepCampaign {
    std::vector<ComplexSpectrum> spectra;
    SweepAxis axis = SweepAxis::Power;
    double attenuation_db = 0.0;   // total input-line attenuation, VNA -> chip
};

// Throws DomainError if the invariants do not hold (monotone freqs, length >= 8,
// equal lengths, all values finite).
void validate(const ComplexSpectrum& spec);

// Throws DomainError if axis-required metadata is missing or attenuation < 0.
void validate(const SweepCampaign& campaign);

// Two-port Touchstone v1 reader. Only S-parameters are accepted; S21 is taken
// from the (2,1) position. Formats RI/MA/DB and units Hz/kHz/MHz/GHz are
// handled; the reference resistance is ignored. Errors carry line numbers.
ComplexSpectrum load_touchstone(const std::filesystem::path& path);

enum class CsvSchema { ReIm, MagDbPhaseDeg };

// CSV reader: header "freq_hz,re,im" (ReIm) or "freq_hz,mag_db,phase_deg"
// (MagDbPhaseDeg), UTF-8, '.' decimal point.
ComplexSpectrum load_csv(const std::filesystem::path& path, CsvSchema schema);

// CSV writer; samples keep 17 significant digits so a ReIm round-trip stays
// within 1e-12 relative error.
void write_csv(const ComplexSpectrum& spec, const std::filesystem::path& path,
               CsvSchema schema);

// 10^((p_dbm - 30)/10).
double dbm_to_watts(double p_dbm);

// Multiply every sample by exp(+j 2 pi f tau). Ingestion-time preprocessing;
// the resonance model itself carries a constant phase offset only.
ComplexSpectrum remove_electrical_delay(ComplexSpectrum spec, double tau_s);

// Campaign manifest: a JSON document listing spectrum files, per-entry
// power_dbm/temperature_k/label, and the campaign attenuation_db. Relative
// file references are resolved against the manifest's directory.
SweepCampaign load_campaign_manifest(const std::filesystem::path& path);

// Writes one CSV (ReIm) per spectrum plus manifest.json into dir.
// Returns the manifest path.
std::filesystem::path write_campaign(const SweepCampaign& campaign,
                                     const std::filesystem::path& dir,
                                     const std::string& stem = "spectrum");

} // namespace reslab::spectra

#endif // RESLAB_SPECTRA_HPP
