"""Print the expansions and automata of the named example expressions."""

from expanse import Context, assert_equiv, build, expand


def show(alphabet, weights, text, automaton=True):
    ctx = Context(alphabet, weights)
    e = ctx.parse(text)
    print(f"E = {e}    over {weights.upper()}, alphabet {alphabet}")
    print(f"  d(E) = {expand(e)}")
    if automaton:
        a = build(e)
        print(f"  {len(a)} states")
        for i, s in enumerate(a.states):
            print(f"    {i}: {s}" + (f"   final <{ctx.domain.format(a.final[i])}>" if i in a.final else ""))
        for i, letter, j, k in a.transition_list():
            print(f"    {i} --<{ctx.domain.format(k)}>{letter}--> {j}")
        print(f"  {assert_equiv(e, max_len=5)}")
    print()


def main():
    show("ab", "q", "<1/6>a*+<1/3>b*", automaton=False)
    show("ab", "q", "(<1/6>a*+<1/3>b*)*")
    show("ab", "z", "<2>ab<+<3>(a+b){+}")
    show("a", "b", "(aa)*&(aaa)*")
    show("ab", "b", "((a+b)*a(a+b)(a+b)){c}")
    show("a", "q", "((<2>a)*+(<4>aa)*){c}")


if __name__ == "__main__":
    main()
