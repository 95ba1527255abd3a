#include <catch2/catch_amalgamated.hpp>

#include "yesno/core.hpp"
#include "yesno/rng.hpp"

using namespace yesno;

TEST_CASE("code validation accepts and rejects per the AB rule") {
    GameParams p44(4, 4);
    CHECK(validate_code({1, 2, 3, 4}, p44).entries() == std::vector<int>{1, 2, 3, 4});

    GameParams p35(3, 5);
    CHECK(validate_code({5, 1, 2}, p35).color_at(1) == 5);

    auto kind_of = [](auto fn) {
        try {
            fn();
        } catch (const GameError& e) {
            return e.kind();
        }
        return ErrorKind::Precondition;
    };
    CHECK(kind_of([&] { validate_code({1, 1, 2, 3}, p44); }) == ErrorKind::RepeatedColor);
    CHECK(kind_of([&] { validate_code({1, 2, 3}, p44); }) == ErrorKind::WrongLength);
    CHECK(kind_of([&] { validate_code({1, 2, 9}, p35); }) == ErrorKind::ColorOutOfRange);
    CHECK(kind_of([&] { validate_code({0, 1, 2}, p35); }) == ErrorKind::ColorOutOfRange);
}

TEST_CASE("code string round trip") {
    GameParams p(10, 10);
    Code code = parse_code("9,10,6,8,4,2,7,5,1,3", p);
    CHECK(code_to_string(code) == "9,10,6,8,4,2,7,5,1,3");
    CHECK_THROWS_AS(parse_code("9,x,1", GameParams(3, 9)), GameError);
}

TEST_CASE("shift queries match the worked examples") {
    CHECK(shift_query(2, GameParams(4, 4)).entries() == std::vector<int>{4, 1, 2, 3});
    CHECK(shift_query(3, GameParams(4, 4)).entries() == std::vector<int>{3, 4, 1, 2});
    CHECK(shift_query(4, GameParams(4, 4)).entries() == std::vector<int>{2, 3, 4, 1});

    // k > n uses the first n entries of the k-cycle shifts.
    GameParams p35(3, 5);
    CHECK(shift_query(1, p35).entries() == std::vector<int>{1, 2, 3});
    CHECK(shift_query(2, p35).entries() == std::vector<int>{5, 1, 2});
    CHECK(shift_query(3, p35).entries() == std::vector<int>{4, 5, 1});
    CHECK(shift_query(4, p35).entries() == std::vector<int>{3, 4, 5});
    CHECK(shift_query(5, p35).entries() == std::vector<int>{2, 3, 4});

    CHECK(shift_query(1, GameParams(6, 9)).entries() == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(shift_query(0, p35), GameError);
    CHECK_THROWS_AS(shift_query(6, p35), GameError);
}

TEST_CASE("shift family places every color at every position exactly once") {
    for (GameParams params : {GameParams(5, 5), GameParams(4, 7), GameParams(1, 3)}) {
        for (int pos = 1; pos <= params.positions; ++pos) {
            std::vector<bool> seen(static_cast<std::size_t>(params.colors) + 1, false);
            for (int j = 1; j <= params.colors; ++j) {
                int color = shift_query(j, params).color_at(pos);
                CHECK(color == shift_color(j, pos, params));
                CHECK(owner_shift(pos, color, params) == j);
                CHECK(!seen[static_cast<std::size_t>(color)]);
                seen[static_cast<std::size_t>(color)] = true;
            }
        }
    }
}

TEST_CASE("info answers yes exactly when some position matches") {
    GameParams p(10, 10);
    Code secret = parse_code("9,10,6,8,4,2,7,5,1,3", p);
    CHECK(info(secret, secret) == Answer::Yes);
    CHECK(info(parse_code("1,2,3,4,5,6,7,8,9,10", p), secret) == Answer::Yes);  // position 7
    CHECK(info(parse_code("7,8,9,10,1,2,3,4,5,6", p), secret) == Answer::Yes);  // position 6

    // Mismatch means the query avoids the secret's color at every position.
    GameParams p5(5, 5);
    for (const Code& a : enumerate_all_codes(p5))
        for (const Code& b : enumerate_all_codes(p5)) {
            bool any = false;
            for (int i = 1; i <= 5; ++i) any = any || a.color_at(i) == b.color_at(i);
            CHECK(is_yes(info(a, b)) == any);
        }
}

TEST_CASE("bound formulas") {
    CHECK(lower_bound_queries(GameParams(1, 1)) == 0.0);
    CHECK_THAT(lower_bound_queries(GameParams(4, 4)),
               Catch::Matchers::WithinAbs(std::log2(24.0), 1e-12));
    CHECK_THAT(lower_bound_queries(GameParams(2, 3)),
               Catch::Matchers::WithinAbs(std::log2(6.0), 1e-12));
    // Stirling floor: log2(n!) >= n log2 n - n log2 e. (The looser "- n"
    // form sometimes quoted is false already at n = 8.)
    for (int n : {4, 8, 16, 64}) {
        double bound = lower_bound_queries(GameParams(n, n));
        CHECK(bound >= n * std::log2(double(n)) - n * std::log2(std::exp(1.0)));
        CHECK(bound <= n * std::log2(double(n)));
    }

    CHECK_THAT(upper_bound_queries(GameParams(8, 8)), Catch::Matchers::WithinAbs(34.0, 1e-12));
    CHECK_THAT(upper_bound_queries(GameParams(4, 4)), Catch::Matchers::WithinAbs(11.0, 1e-12));
    CHECK_THAT(upper_bound_queries(GameParams(3, 5)),
               Catch::Matchers::WithinAbs(std::log2(3.0) + 6.0, 1e-12));
    // The k > n expression stays meaningful down to n = 1; only the
    // permutation form is rejected below n = 4.
    CHECK_THAT(upper_bound_queries(GameParams(2, 9)), Catch::Matchers::WithinAbs(10.0, 1e-12));
    CHECK_THAT(upper_bound_queries(GameParams(1, 6)), Catch::Matchers::WithinAbs(7.0, 1e-12));
    CHECK_THROWS_AS(upper_bound_queries(GameParams(3, 3)), GameError);
    CHECK_THROWS_AS(upper_bound_queries(GameParams(2, 2)), GameError);

    CHECK(accounting_bound_queries(GameParams(4, 4)) == 2 * 2 + 10 + 4);
    CHECK(accounting_bound_queries(GameParams(10, 10)) == 8 * 4 + 25 + 10);
    CHECK(accounting_bound_queries(GameParams(3, 5)) == 3 * 2 + 3 + 5 + 2);

    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(128) == 7);
}

TEST_CASE("lower bound equals the enumerated entropy on every small board") {
    for (int k = 1; k <= 8; ++k) {
        for (int n = 1; n <= k && code_space_size(GameParams(n, k)) <= 50'000; ++n) {
            GameParams params(n, k);
            double enumerated = static_cast<double>(enumerate_all_codes(params).size());
            CHECK_THAT(lower_bound_queries(params),
                       Catch::Matchers::WithinAbs(std::log2(enumerated), 1e-9));
        }
    }
}

TEST_CASE("code space size and enumeration agree") {
    CHECK(code_space_size(GameParams(2, 2)) == 2.0);
    CHECK(code_space_size(GameParams(2, 3)) == 6.0);
    CHECK(code_space_size(GameParams(4, 4)) == 24.0);
    for (GameParams params : {GameParams(3, 3), GameParams(2, 4), GameParams(3, 5)}) {
        auto all = enumerate_all_codes(params);
        CHECK(static_cast<double>(all.size()) == code_space_size(params));
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    CHECK_THROWS_AS(enumerate_all_codes(GameParams(12, 12)), GameError);
}

TEST_CASE("transcript recorder counts, labels and validates") {
    GameParams params(4, 4);
    HonestCodemaker honest(parse_code("2,1,4,3", params));
    TranscriptRecorder recorder(honest, params);

    recorder.respond(shift_query(1, params));
    {
        PurposeScope scope(recorder, QueryPurpose::FindNext);
        recorder.respond(shift_query(2, params));
    }
    recorder.respond(shift_query(3, params));

    const auto& records = recorder.transcript().records();
    REQUIRE(records.size() == 3);
    CHECK(records[0].seq == 1);
    CHECK(records[1].seq == 2);
    CHECK(records[2].seq == 3);
    CHECK(records[0].purpose == QueryPurpose::Initial);
    CHECK(records[1].purpose == QueryPurpose::FindNext);
    CHECK(records[2].purpose == QueryPurpose::Initial);
    CHECK(records[1].answer == info(shift_query(2, params), parse_code("2,1,4,3", params)));
}

TEST_CASE("seeded rng is reproducible and fisher-yates prefixes are valid") {
    GameParams params(5, 9);
    SeededRng a(42), b(42), c(43);
    Code first = random_code(params, a);
    CHECK(first == random_code(params, b));
    CHECK(validate_code(first.entries(), params).entries() == first.entries());

    bool differs = false;
    for (int i = 0; i < 10 && !differs; ++i)
        differs = !(random_code(params, a) == random_code(params, c));
    CHECK(differs);

    // Every permutation reachable on a tiny board.
    GameParams tiny(2, 2);
    SeededRng rng(1);
    bool saw_12 = false, saw_21 = false;
    for (int i = 0; i < 64; ++i) {
        Code code = random_code(tiny, rng);
        saw_12 = saw_12 || code.entries() == std::vector<int>{1, 2};
        saw_21 = saw_21 || code.entries() == std::vector<int>{2, 1};
    }
    CHECK(saw_12);
    CHECK(saw_21);
}
