#include "hopf/gallery.hpp"
#include "hopf/io.hpp"

#include <doctest.h>

using namespace hopf;

TEST_CASE("scalar codec") {
    CHECK(io::decodeScalar("1/2", 9) == Cyc(Rat(1, 2)));
    CHECK(io::decodeScalar("0,1", 3) == Cyc::rootOfUnity(3));
    CHECK(io::encodeScalar(Cyc::rootOfUnity(3), 9) == "0,0,0,1,0,0");
    CHECK(io::decodeScalar(io::encodeScalar(Cyc(Rat(-7, 3)), 8), 8) == Cyc(Rat(-7, 3)));
    CHECK_THROWS_AS(io::decodeScalar("1.5", 3), io::CodecError);
    CHECK_THROWS_AS(io::decodeScalar("", 3), io::CodecError);
    CHECK_THROWS_AS(io::decodeScalar("1,2,3", 3), io::CodecError); // phi(3) = 2
}

TEST_CASE("presentation files roundtrip losslessly and canonically") {
    auto ctx = buildQuantumPlane(dim32Datum(1, Cyc(1), Cyc(1), Cyc(1)));
    REQUIRE(ctx->buildChecks.ok());
    const Presentation& a = ctx->A();
    CHECK(a.dim() == 32);
    CHECK(a.fieldOrder == 8); // q a primitive 8th root of unity

    io::Json j = io::encodePresentation(a);
    CHECK(j["basis"].size() == 32);
    auto back = io::decodePresentation(j);
    CHECK(samePresentation(*back, a));
    CHECK(back->basis == a.basis);
    REQUIRE(back->antipode.has_value());
    CHECK(*back->antipode == *a.antipode);
    // decode then encode is byte-identical on canonical files
    CHECK(io::encodePresentation(*back).dump(1) == j.dump(1));
}

TEST_CASE("cocycle files roundtrip") {
    auto ctx = buildQuantumPlane(dim32Datum(3, Cyc(1), Cyc(1), Cyc(1)));
    BilForm gamma = omegaExtend(ctx->info, ctx->A(), upsilonDim32Gamma(*ctx, Cyc(1), Cyc(1), Cyc(1)));
    io::Json j = io::encodeBilForm(gamma, ctx->A().name, ctx->A().fieldOrder);
    BilForm back = io::decodeBilForm(j, ctx->A().dim());
    CHECK(back == gamma);
    CHECK_THROWS_AS(io::decodeBilForm(j, 5), io::CodecError);
}

TEST_CASE("splitting and prebialgebra files roundtrip") {
    auto ctx = buildQuantumPlane(dim32Datum(1, Cyc(1), Cyc(1), Cyc(1)));
    io::Json js = io::encodeSplitting(ctx->smash.datum);
    SplittingDatum back = io::decodeSplitting(js, ctx->smash.datum.A);
    CHECK(back.pi == ctx->smash.datum.pi);
    CHECK(back.sigma == ctx->smash.datum.sigma);
    CHECK(samePresentation(*back.H, *ctx->smash.datum.H));

    io::Json jp = io::encodePreBialgebra(ctx->nichols);
    PreBialgebra p = io::decodePreBialgebra(jp);
    CHECK(samePreBialgebra(p, ctx->nichols));
    CHECK(p.R.yd.labels == ctx->nichols.R.yd.labels);
}

TEST_CASE("malformed inputs are rejected") {
    io::Json j;
    j["format_version"] = 99;
    CHECK_THROWS_AS(io::decodePresentation(j), io::CodecError);
    j["format_version"] = 1;
    CHECK_THROWS_AS(io::decodePresentation(j), io::CodecError); // kind missing
    j["kind"] = "algebra";
    j["field_order"] = 4;
    j["basis"] = io::Json::array({"1", "x"});
    j["unit"] = io::Json::array({io::Json::array({5, "1"})}); // index out of range
    j["counit"] = io::Json::array();
    j["mult"] = io::Json::array();
    j["comult"] = io::Json::array();
    CHECK_THROWS_AS(io::decodePresentation(j), io::CodecError);
}
