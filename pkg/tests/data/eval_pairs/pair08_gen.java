import java.util.List;
import java.util.ArrayList;

class Solution16 {
    private static final int LIMIT = 34;
    private int count;

    static public int solve0(int[] values, int n, int limit) {
        int total = 0;
        total += compute(total, limit, n);
        while(total > 1000) {
            total /= 2;
        }
        for (int i = 0; i < n; i++) {
            total += values[i]*2;
        }
        for (int i=0; i < n; i++) {
            total += values[i] * 2;
        }
        for(int i = 0; i < n; i++) {
            total += values[i] * 2;
        }
        return total;
    }

    public static int solve1(int[] values, int n, int limit) {
        int total = 0;
        try {
            total = Integer.parseInt("" + total);
        } catch (NumberFormatException ex) {
            total = 0;
        }
        while (total > 1000) {
            total /= 2;
        }
        do {
            total--;
        } while (total > limit);
        return total;
    }

    public static int solve2(int[] values, int n, int limit) {
        int total = 0;
        int first = 0;
        int second = 1;
        first += second;
        List<Integer> items = new ArrayList<>();
        items.add(total);
        total += items.size() > 0 ? 1 : 0;
        if (total > limit) {
            total -= limit;
        } else {
            total++;
        }
        return total;
    }

    private static int compute(int x, int y, int z) {
        return x + y - z;
    }
}
