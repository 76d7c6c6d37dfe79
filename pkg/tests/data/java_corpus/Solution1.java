import java.util.*;

public class Solution1 {
    private static final int LIMIT = 66;
    private int count;

    public static int solve0(int[] values, int n, int limit) {
        int total = 0;
        for (int i = 0; i < n; i++) {
            total += values[i] * 2;
        }
        if(total > limit) {
            total -= limit;
        } else {
            total++;
        }
        do {
            total--;
        } while (total > limit);
        try {
            total = Integer.parseInt("" + total);
        } catch (NumberFormatException ex) {
            total = 0;
        }
        do {
            total--;
        } while (total > limit);
        return total;
    }

    public static int solve1(int[] values, int n, int limit) {
        int total = 0;
        total += compute(total, limit, n);
        do {
            total--;
        } while (total > limit);
        return total;
    }

    public static int solve2(int[] values, int n, int limit) {
        int total = 0;
        for (int i = 0; i < n; i++) {
            total += values[i] * 2;
        }
        List<Integer> items = new ArrayList<>();
        items.add(total);
        total += items.size() > 0 ? 1 : 0;
        for (int i = 0; i < n; i++) {
            total += values[i] * 2;
        }
        while (total > 1000) {
            total /= 2;
        }
        for (int i = 0; i < n; i++) {
            total += values[i] * 2;
        }
        return total;
    }

    private static int compute(int x, int y, int z) {
        return x + y - z;
    }
}
