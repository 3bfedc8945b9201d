/*
   Copyright 2026 The wirepack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <streambuf>
#include <vector>

#include "wirepack/buffers.hpp"
#include "wirepack/serializer.hpp"

namespace wirepack {
namespace {

using Bytes = std::vector<std::uint8_t>;

// A read-only streambuf that refuses to seek, like a pipe.
class PipeBuf : public std::streambuf {
  public:
    explicit PipeBuf(std::string data) : data_(std::move(data)) {
        setg(data_.data(), data_.data(), data_.data() + data_.size());
    }

  private:
    std::string data_;
};

// A streambuf whose writes always fail.
class BrokenSink : public std::streambuf {
  protected:
    int_type overflow(int_type) override { return traits_type::eof(); }
    std::streamsize xsputn(const char*, std::streamsize) override { return 0; }
};

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / (std::string("wirepack_buffers_") + name);
}

TEST(OutputBuffer, AppendsInOrder) {
    OutputBuffer out;
    out.put(0x02);
    out.put(0x16);
    EXPECT_EQ(out.take(), (WireBytes{0x02, 0x16}));
}

TEST(OutputBuffer, EmptyWriteIsIdentity) {
    OutputBuffer out;
    out.put(0x07);
    out.write(Bytes{});
    EXPECT_EQ(out.size(), 1u);
    EXPECT_EQ(out.take(), (WireBytes{0x07}));
}

TEST(OutputBuffer, RetrievesExactBytes) {
    OutputBuffer out;
    out.write(Bytes{0x02, 0x16, 0xCD, 0x02});
    EXPECT_EQ(out.size(), 4u);
    const WireBytes bytes = out.take();
    EXPECT_EQ(bytes, (WireBytes{0x02, 0x16, 0xCD, 0x02}));
    EXPECT_EQ(bytes.hex(), "02 16 cd 02");
    EXPECT_EQ(out.size(), 0u);
}

TEST(OutputBuffer, ConcatenationProperty) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        OutputBuffer out;
        Bytes expected;
        const int writes = static_cast<int>(rng() % 50);
        for (int w = 0; w < writes; ++w) {
            Bytes chunk(rng() % 300);
            for (auto& b : chunk) b = static_cast<std::uint8_t>(rng());
            if (rng() % 3 == 0 && !chunk.empty()) {
                out.put(chunk[0]);
                expected.push_back(chunk[0]);
            } else {
                out.write(chunk);
                expected.insert(expected.end(), chunk.begin(), chunk.end());
            }
            ASSERT_EQ(out.size(), expected.size());
        }
        ASSERT_EQ(out.take().vector(), expected);
    }
}

TEST(InputBuffer, ReadsRequestedBytes) {
    const Bytes src{0xCD, 0x02};
    InputBuffer in{src};
    auto got = in.read_bytes(2);
    ASSERT_TRUE(got.ok());
    EXPECT_EQ(Bytes(got->begin(), got->end()), src);
    EXPECT_EQ(in.position(), 2u);
    EXPECT_TRUE(in.at_end());
}

TEST(InputBuffer, ZeroLengthReadDoesNotMove) {
    const Bytes src{0xCD, 0x02};
    InputBuffer in{src};
    auto got = in.read_bytes(0);
    ASSERT_TRUE(got.ok());
    EXPECT_TRUE(got->empty());
    EXPECT_EQ(in.position(), 0u);
}

TEST(InputBuffer, OverReadTruncatesAndPoisons) {
    const Bytes src{1, 2, 3, 4};
    InputBuffer in{src};
    auto got = in.read_bytes(5);
    ASSERT_FALSE(got.ok());
    EXPECT_EQ(got.error().code, Errc::truncated);
    EXPECT_EQ(got.error().offset, 0u);
    EXPECT_EQ(in.position(), 4u);

    // Later reads keep failing with the original error.
    std::uint8_t b = 0;
    EXPECT_FALSE(in.read_byte(b));
    EXPECT_FALSE(in.read_bytes(0).ok());
    std::uint64_t v = 0;
    EXPECT_FALSE(in.read_varint(v));
    EXPECT_EQ(in.error().code, Errc::truncated);
    EXPECT_EQ(in.error().offset, 0u);
}

TEST(InputBuffer, CursorIsMonotonic) {
    std::mt19937_64 rng(9);
    Bytes src(512);
    for (auto& b : src) b = static_cast<std::uint8_t>(rng());
    InputBuffer in{src};
    std::size_t last = 0;
    while (in.ok()) {
        std::uint8_t tmp[16];
        switch (rng() % 3) {
            case 0: in.read(tmp, rng() % 16); break;
            case 1: {
                std::uint64_t v;
                in.read_varint(v);
                break;
            }
            default: in.read_byte(tmp[0]);
        }
        ASSERT_GE(in.position(), last);
        ASSERT_LE(in.position(), src.size());
        last = in.position();
    }
}

TEST(StreamBuffers, FileRoundTrip) {
    const auto path = temp_file("file_roundtrip.bin");
    {
        std::ofstream file(path, std::ios::binary);
        StreamOutputBuffer out{file};
        out.write_varint(2);
        out.write_varint(22);
        out.write_varint(333);
        ASSERT_TRUE(out.flush().ok());
        EXPECT_EQ(out.size(), 4u);
    }
    std::ifstream file(path, std::ios::binary);
    StreamInputBuffer in{file};
    ASSERT_EQ(in.remaining(), std::optional<std::size_t>{4});
    std::uint64_t a = 0, b = 0, c = 0;
    ASSERT_TRUE(in.read_varint(a) && in.read_varint(b) && in.read_varint(c));
    EXPECT_EQ(a, 2u);
    EXPECT_EQ(b, 22u);
    EXPECT_EQ(c, 333u);
    EXPECT_EQ(in.remaining(), std::optional<std::size_t>{0});
    std::filesystem::remove(path);
}

TEST(StreamBuffers, EmptyStreamReadTruncates) {
    std::istringstream empty{std::string{}};
    StreamInputBuffer in{empty};
    std::uint8_t b = 0;
    EXPECT_FALSE(in.read(&b, 1));
    EXPECT_EQ(in.error().code, Errc::truncated);
    EXPECT_FALSE(in.read(&b, 0));  // poisoned
}

TEST(StreamBuffers, NonSeekableStreamHasUnknownRemaining) {
    PipeBuf pipe{std::string("\x05\x01", 2)};
    std::istream in_stream(&pipe);
    StreamInputBuffer in{in_stream};
    EXPECT_FALSE(in.remaining().has_value());
    std::uint64_t v = 0;
    ASSERT_TRUE(in.read_varint(v));
    EXPECT_EQ(v, 5u);
    EXPECT_EQ(in.position(), 1u);
}

TEST(StreamBuffers, StopsExactlyAfterConsumedBytes) {
    std::istringstream src{std::string("\xCD\x02\x16", 3)};
    StreamInputBuffer in{src};
    std::uint64_t v = 0;
    ASSERT_TRUE(in.read_varint(v));
    EXPECT_EQ(v, 333u);
    EXPECT_EQ(src.tellg(), 2);
    EXPECT_EQ(src.get(), 0x16);
}

TEST(StreamBuffers, TruncatedVarintReportsItsStart) {
    std::istringstream src{std::string("\x01\x80\x80", 3)};
    StreamInputBuffer in{src};
    std::uint64_t v = 0;
    ASSERT_TRUE(in.read_varint(v));
    EXPECT_FALSE(in.read_varint(v));
    EXPECT_EQ(in.error().code, Errc::truncated);
    EXPECT_EQ(in.error().offset, 1u);
}

TEST(StreamBuffers, OverflowingVarintOnStream) {
    std::string bad(10, '\x80');
    bad += '\x00';
    std::istringstream src{bad};
    StreamInputBuffer in{src};
    std::uint64_t v = 0;
    EXPECT_FALSE(in.read_varint(v));
    EXPECT_EQ(in.error().code, Errc::overflow);
    EXPECT_EQ(in.error().offset, 0u);
}

TEST(StreamBuffers, ChunkBoundariesDoNotChangeBytes) {
    std::mt19937_64 rng(17);
    for (std::size_t chunk : {std::size_t{1}, std::size_t{10}, std::size_t{16}, std::size_t{1000}, kDefaultStreamChunk}) {
        OutputBuffer memory;
        std::ostringstream sink;
        {
            StreamOutputBuffer stream{sink, chunk};
            for (int i = 0; i < 2000; ++i) {
                const std::uint64_t v = rng() >> (rng() % 64);
                Bytes block(rng() % 40);
                for (auto& b : block) b = static_cast<std::uint8_t>(rng());
                memory.write_varint(v);
                stream.write_varint(v);
                memory.write(block);
                stream.write(block);
                memory.put(static_cast<std::uint8_t>(v));
                stream.put(static_cast<std::uint8_t>(v));
            }
            ASSERT_TRUE(stream.flush().ok());
            ASSERT_EQ(stream.size(), memory.size());
        }
        const std::string s = sink.str();
        const auto expected = memory.take();
        ASSERT_EQ(Bytes(s.begin(), s.end()), expected.vector()) << "chunk " << chunk;
    }
}

TEST(StreamBuffers, DoublesThroughStreamMatchMemory) {
    std::mt19937_64 rng(23);
    std::vector<double> values(100000);
    for (auto& x : values) x = std::bit_cast<double>(rng());

    OutputBuffer memory;
    serialize_value(values, memory);
    const WireBytes expected = memory.take();

    std::stringstream channel;
    {
        StreamOutputBuffer out{channel};
        serialize_value(values, out);
        ASSERT_TRUE(out.flush().ok());
    }
    const std::string s = channel.str();
    ASSERT_EQ(Bytes(s.begin(), s.end()), expected.vector());

    StreamInputBuffer in{channel};
    std::vector<double> back;
    ASSERT_TRUE(parse_value(back, in));
    ASSERT_EQ(back.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ASSERT_EQ(std::bit_cast<std::uint64_t>(back[i]), std::bit_cast<std::uint64_t>(values[i]));
    }
}

TEST(StreamBuffers, WriteFailureIsAnIoError) {
    BrokenSink broken;
    std::ostream sink(&broken);
    StreamOutputBuffer out{sink, 16};
    for (int i = 0; i < 100; ++i) out.write_varint(1000);
    const Status st = out.flush();
    ASSERT_FALSE(st.ok());
    EXPECT_EQ(st.error().code, Errc::io);
}

TEST(StreamBuffers, UnopenedStreamsAreIoErrors) {
    std::ofstream closed_out;
    closed_out.setstate(std::ios::badbit);
    StreamOutputBuffer out{closed_out};
    EXPECT_FALSE(out.ok());
    EXPECT_EQ(out.error().code, Errc::io);

    std::ifstream missing(temp_file("does_not_exist.bin"), std::ios::binary);
    StreamInputBuffer in{missing};
    EXPECT_FALSE(in.ok());
    EXPECT_EQ(in.error().code, Errc::io);
}

}  // namespace
}  // namespace wirepack
