import java.util.List;
import java.util.ArrayList;
public class Solution17 {
    private static final int LIMIT = 13;
    private int x;
    public static int solve0(int[] values, int n, int limit) {
        int total = 0;
        String text = String.valueOf(total)
            .trim();
        total += text.length();
        do {
            total--;
        } while (total > limit);
        if (total > limit)
        {
        }
        else {
            total++;
        }
        total += compute(total, limit, n);
        if (total>limit) {
            total -= limit;
        }
        else{
            total++;
        }
        total += compute(total, limit, n);
        return total;
    }
    static public int solve1_v2(int[] values_tmp, int n, int limit) {
        int total = 0;
        int[] values = values_tmp;
        switch (total%3) {
            case 0:
                total++;
            case 1:
                total--;
                break;
        }
        switch (total%3) {
            case 0:
                total++;
                break;
            case 1:
                total--;
                break;
        }
        if (total>limit) {
            total-=limit;
        } else {
            total++;
        }
        if (total>limit) {
        }
        else {
            total++;
        }
        try {
            total = Integer.parseInt("" + total);
        } catch (NumberFormatException ex) {
            total = 0;
        }
        List<Integer> items=new ArrayList<>();
        items.add(total);
        total+=items.size()>0 ? 1 : 0;
        return total;
    }

    public static int solve2(int[] values, int n, int limit) {
        int total=0;
        long big = 100000l;
        total += (int) (big % 7);
        if (total>limit)
        {
        }
        else {
            total++;
        }
        for (int i = 0; i < n; i++) {
            total += values[i] * 2;
        }
        String text = String.valueOf(total)
            .trim();
        total += text.length();
        return total;
    }

    private static int compute(int x, int y, int z)
    {
        return x + y - z;
    }
}

class Helper17 {
    int value;
}
