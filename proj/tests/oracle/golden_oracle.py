#!/usr/bin/env python3
"""Independent reference computation for the golden ranking test.

Reads the three dataset CSVs and writes, from first principles, every
derived value the C++ engine is checked against: per-player features,
cluster scores, final rank scores, orderings, labels and credits.
Shares no code with the engine.
"""
import argparse
import csv
import math
import pathlib
from collections import defaultdict

BAT_FIELDS = ["innings", "not_outs", "runs", "balls", "hundreds", "fifties", "fours", "sixes"]
BOWL_FIELDS = ["innings", "balls", "runs_conceded", "wickets", "four_hauls", "five_hauls"]

PROFILES = {
    "opener": {"cost_sr": 30, "cost_avg": 30, "hc": 20, "cost_rw": 10, "cost_hh": 10},
    "middle": {"cost_sr": 20, "cost_avg": 30, "hc": 10, "cost_rw": 25, "cost_hh": 15},
    "finisher": {"cost_sr": 40, "cost_hh": 40, "nof": 5, "cost_rw": 15},
    "bowler": {"wpb": 35, "cons": 35, "inv_avg": 10, "inv_eco": 10},
}
GROUPS = [10, 9, 8, 7]


def div(a, b):
    return a / b if b != 0 else 0.0


def bat_feat(r):
    return {
        "avg": r["runs"] / max(1, r["innings"] - r["not_outs"]),
        "sr": div(100.0 * r["runs"], r["balls"]),
        "rw": div(r["runs"] - 4 * r["fours"] - 6 * r["sixes"], r["balls"] - r["fours"] - r["sixes"]),
        "hh": div(4 * r["fours"] + 6 * r["sixes"], r["balls"]),
        "hc": div(r["fifties"] + r["hundreds"], r["innings"]),
        "nof": div(r["not_outs"], r["innings"]),
    }


def bowl_feat(r):
    rc = r["runs_conceded"] if r["runs_conceded"] != 0 else 1
    residual = r["wickets"] - 4 * r["four_hauls"] - 5 * r["five_hauls"]
    return {
        "wpb": div(r["wickets"], r["balls"]),
        "inv_avg": r["wickets"] / rc,
        "inv_eco": r["balls"] / (6.0 * rc),
        "cons": div((4 * r["four_hauls"] + 5 * r["five_hauls"] + residual) * 6.0, r["balls"]),
    }


def normalize(values):
    top = max(values.values())
    return {k: (v / top if top != 0 else 0.0) for k, v in values.items()}


def read(path, fields):
    rows = defaultdict(dict)
    with open(path) as f:
        for row in csv.DictReader(f):
            rows[row["id"]][int(row["season"])] = {k: int(row[k]) for k in fields}
    return rows


def group_sizes(n, groups):
    g = math.ceil(n / groups)
    sizes, left = [], n
    for _ in range(groups):
        take = min(g, left)
        sizes.append(take)
        left -= take
    if n >= groups and 0 in sizes:
        base, extra = divmod(n, groups)
        sizes = [base + (1 if i < extra else 0) for i in range(groups)]
    return sizes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data", default="data/synthetic")
    ap.add_argument("--out", default="tests/golden")
    args = ap.parse_args()
    data = pathlib.Path(args.data)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    retired = {}
    with open(data / "players.csv") as f:
        for row in csv.DictReader(f):
            retired[row["id"]] = row["is_retired"] == "true"
    bat = read(data / "batting.csv", BAT_FIELDS)
    bowl = read(data / "bowling.csv", BOWL_FIELDS)
    current = max([s for p in bat.values() for s in p] + [s for p in bowl.values() for s in p])

    def career(rows, pid, fields):
        return {k: sum(r[k] for r in rows.get(pid, {}).values()) for k in fields}

    def now(rows, pid, fields):
        return rows.get(pid, {}).get(current, {k: 0 for k in fields})

    n_total = max(max(career(bat, p, BAT_FIELDS)["innings"], career(bowl, p, BOWL_FIELDS)["innings"])
                  for p in retired)

    batsmen = sorted(p for p in bat if not retired[p])
    bowlers = sorted(p for p in bowl if not retired[p])

    def pool_views(pool, rows, fields, feat, costed):
        views = {}
        for view, getter in (("career", career), ("current", now)):
            raw = {p: feat(getter(rows, p, fields)) for p in pool}
            cost = {name: normalize({p: raw[p][name] for p in pool}) for name in costed}
            views[view] = {p: dict(raw[p], **{"cost_" + n: cost[n][p] for n in costed}) for p in pool}
        x = {p: career(rows, p, fields)["innings"] / n_total for p in pool}
        rng = max(x.values()) - min(x.values())
        cx = {p: (x[p] / rng if rng != 0 else 1.0) for p in pool}
        return views, cx

    bat_views, bat_cx = pool_views(batsmen, bat, BAT_FIELDS, bat_feat, ["sr", "avg", "rw", "hh"])
    bowl_views, bowl_cx = pool_views(bowlers, bowl, BOWL_FIELDS, bowl_feat, [])

    with open(out / "features.csv", "w") as f:
        f.write("player_id,view,avg,strike_rate,run_wicket,hard_hitting,hc_per_innings,not_out_fraction,"
                "cost_avg,cost_strike_rate,cost_run_wicket,cost_hard_hitting,cost_xfact\n")
        for p in batsmen:
            for view in ("career", "current"):
                v = bat_views[view][p]
                vals = [v["avg"], v["sr"], v["rw"], v["hh"], v["hc"], v["nof"],
                        v["cost_avg"], v["cost_sr"], v["cost_rw"], v["cost_hh"], bat_cx[p]]
                f.write(f"{p},{view}," + ",".join(repr(float(x)) for x in vals) + "\n")
    with open(out / "bowling_features.csv", "w") as f:
        f.write("player_id,view,wicket_per_ball,inv_average,inv_economy,consistency,cost_xfact\n")
        for p in bowlers:
            for view in ("career", "current"):
                v = bowl_views[view][p]
                vals = [v["wpb"], v["inv_avg"], v["inv_eco"], v["cons"], bowl_cx[p]]
                f.write(f"{p},{view}," + ",".join(repr(float(x)) for x in vals) + "\n")

    rankings = {}
    for cluster, prof in PROFILES.items():
        views, cx, pool = (bowl_views, bowl_cx, bowlers) if cluster == "bowler" else (bat_views, bat_cx, batsmen)
        score = {view: {p: sum(w * views[view][p][k] for k, w in prof.items()) for p in pool}
                 for view in ("career", "current")}
        mean = sum(score["current"][p] for p in pool) / len(pool)
        final = {}
        for p in pool:
            c, cur = score["career"][p], score["current"][p]
            final[p] = c * cx[p] * (cur / mean) + cur if mean != 0 else cur
        order = sorted(pool, key=lambda p: (-final[p], p))
        rankings[cluster] = [(p, score["career"][p], score["current"][p], final[p]) for p in order]

    pos = {c: {e[0]: i + 1 for i, e in enumerate(r)} for c, r in rankings.items()}
    fin = {c: {e[0]: e[3] for e in r} for c, r in rankings.items()}
    labels = {}
    letters = {"opener": "O", "middle": "M", "finisher": "F"}
    for p in batsmen:
        bats = ["opener", "middle", "finisher"]
        primary = sorted(bats, key=lambda c: (-fin[c][p], pos[c][p], bats.index(c)))[0]
        labels[p] = (primary, [c for c in bats if pos[c][p] <= pos[primary][p]])

    with open(out / "rankings.csv", "w") as f:
        f.write("cluster,rank,player_id,career_score,current_score,final_score,credit\n")
        for cluster, r in rankings.items():
            sizes = group_sizes(len(r), len(GROUPS))
            credits = [GROUPS[i] for i, s in enumerate(sizes) for _ in range(s)]
            for i, (p, car, cur, fs) in enumerate(r):
                f.write(f"{cluster},{i + 1},{p},{car!r},{cur!r},{fs!r},{credits[i]}\n")
    with open(out / "labels.csv", "w") as f:
        f.write("player_id,primary,labels\n")
        for p in batsmen:
            primary, ls = labels[p]
            f.write(f"{p},{primary},{''.join(letters[c] for c in ls)}\n")


if __name__ == "__main__":
    main()
